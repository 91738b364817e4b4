#include "henonseq/generator.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "henonseq/errors.hpp"

namespace henonseq {

void GeneratorConfig::validate() const {
    params.validate();
    if (decimation < 1) {
        throw std::invalid_argument("decimation P must be at least 1");
    }
    if (calibration < 1) {
        throw std::invalid_argument("calibration window T must be at least 1");
    }
    if (seed2 > 1 || seed1 > 1) {
        throw std::invalid_argument("seed bits must be 0 or 1");
    }
    if (!(bound > 0.0)) {
        throw std::invalid_argument("divergence bound must be positive");
    }
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of an empty set");
    }
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) {
        return upper;
    }
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
}

Calibration calibrate(const GeneratorConfig& cfg) {
    cfg.validate();
    Orbit orbit(cfg.params, cfg.bound);
    for (std::uint64_t i = 0; i < cfg.discard; ++i) {
        orbit.next();
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(cfg.calibration);
    ys.reserve(cfg.calibration);
    for (std::uint64_t i = 0; i < cfg.calibration; ++i) {
        const State& s = orbit.next();
        xs.push_back(s.x);
        ys.push_back(s.y);
    }
    return Calibration{Thresholds{median(std::move(xs)), median(std::move(ys))}, orbit.current()};
}

BitSequence combine(const BitSequence& bx, const BitSequence& by, Bit seed2, Bit seed1) {
    if (bx.size() != by.size()) {
        throw LengthMismatch("combine: Bx has " + std::to_string(bx.size()) + " bits, By has " +
                             std::to_string(by.size()));
    }
    BitSequence out(bx.size());
    Bit p2 = seed2;
    Bit p1 = seed1;
    for (std::size_t j = 0; j < bx.size(); ++j) {
        const Bit y = by[j];
        out.set(j, combine_bit(bx[j], y, p2, p1));
        p2 = p1;
        p1 = y;
    }
    return out;
}

namespace {

Orbit calibrated_orbit(const GeneratorConfig& cfg, Thresholds& out) {
    const Calibration c = calibrate(cfg);
    out = c.thresholds;
    return Orbit(cfg.params, c.state, cfg.bound);
}

}  // namespace

Generator::Generator(const GeneratorConfig& cfg)
    : cfg_(cfg), orbit_(calibrated_orbit(cfg, thresholds_)), prev2_(cfg.seed2), prev1_(cfg.seed1) {}

Bit Generator::next_bit() {
    // Only every P-th iterate is sampled; the others just advance the orbit.
    for (std::uint64_t i = 1; i < cfg_.decimation; ++i) {
        orbit_.next();
    }
    const State& s = orbit_.next();
    const Bit bx = extract_bit(s.x, thresholds_.tau_x);
    const Bit by = extract_bit(s.y, thresholds_.tau_y);
    const Bit out = combine_bit(bx, by, prev2_, prev1_);
    prev2_ = prev1_;
    prev1_ = by;
    return out;
}

BitSequence Generator::take(std::size_t n) {
    BitSequence out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, next_bit());
    }
    return out;
}

BitSequence generate(const GeneratorConfig& cfg, std::size_t n) {
    Generator g(cfg);
    return g.take(n);
}

namespace {

struct NamedPreset {
    const char* name;
    double alpha, beta, x0, y0;
    std::uint64_t p;
};

constexpr std::array<NamedPreset, 9> kPresets{{
    {"R1", 1.40, 0.30, -0.75, -0.02, 24},
    {"R2", 1.20, 0.30, -0.75, 0.32, 24},
    {"S1", 1.23, 0.25, -1.0, 1.0, 84},
    {"S2", 1.40, 0.25, -1.0, 1.0, 84},
    {"S3", 1.40, 0.30, -1.0, 1.0, 84},
    {"S4", 1.40, 0.30, -1.0, 1.0, 24},
    {"S5", 1.41, 0.21, -1.0, 1.0, 24},
    {"U1", 1.40, 0.30, -1.0, 1.0, 117},
    {"U2", 1.398, 0.283, 0.26, 0.29, 111},
}};

}  // namespace

std::optional<GeneratorConfig> preset(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto& p : kPresets) {
        if (upper == p.name) {
            GeneratorConfig cfg;
            cfg.params = MapParameters{p.alpha, p.beta, p.x0, p.y0};
            cfg.decimation = p.p;
            cfg.calibration = 1000;
            cfg.seed2 = 0;
            cfg.seed1 = 1;
            return cfg;
        }
    }
    return std::nullopt;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& p : kPresets) {
        out.emplace_back(p.name);
    }
    return out;
}

}  // namespace henonseq
