#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "henonseq/bit_sequence.hpp"
#include "henonseq/henon_map.hpp"

namespace henonseq {

/// Map parameters plus the knobs of the bit pipeline.
struct GeneratorConfig {
    MapParameters params{1.40, 0.30, -1.0, 1.0};
    std::uint64_t decimation = 117;   // keep every P-th extracted bit
    std::uint64_t calibration = 1000; // T: median window length
    std::uint64_t discard = 100;      // transient iterations before the window
    Bit seed2 = 0;                    // history bit B_y(-2)
    Bit seed1 = 1;                    // history bit B_y(-1)
    double bound = kDefaultDivergenceBound;

    void validate() const;
};

struct Thresholds {
    double tau_x = 0.0;
    double tau_y = 0.0;
};

struct Calibration {
    Thresholds thresholds;
    State state;  // point reached after discard + T iterations
};

/// Median of a non-empty multiset; the even case averages the two middle
/// order statistics. Takes a copy because it partially reorders.
double median(std::vector<double> values);

Calibration calibrate(const GeneratorConfig& cfg);

/// 1 if v > tau, else 0 (the boundary maps to 0).
inline Bit extract_bit(double v, double tau) noexcept { return v > tau ? 1 : 0; }

/// Output rule driven by the two previous B_y bits:
///   (0,0) -> Bx(j), (0,1) -> !Bx(j), (1,0) -> By(j), (1,1) -> !By(j).
inline Bit combine_bit(Bit bx, Bit by, Bit prev2, Bit prev1) noexcept {
    const Bit src = prev2 ? by : bx;
    return static_cast<Bit>(src ^ prev1);
}

/// Throws LengthMismatch if bx and by differ in length.
BitSequence combine(const BitSequence& bx, const BitSequence& by, Bit seed2, Bit seed1);

/// Streaming Hénon bit source. Construction performs calibration; each
/// next_bit() advances the orbit by exactly P iterations.
class Generator {
public:
    explicit Generator(const GeneratorConfig& cfg);

    Bit next_bit();
    BitSequence take(std::size_t n);

    const Thresholds& thresholds() const noexcept { return thresholds_; }
    /// Map iterations consumed so far, including discard and calibration.
    std::uint64_t iterations() const noexcept { return orbit_.current().k; }
    const GeneratorConfig& config() const noexcept { return cfg_; }

private:
    GeneratorConfig cfg_;
    Thresholds thresholds_;
    Orbit orbit_;
    Bit prev2_;
    Bit prev1_;
};

BitSequence generate(const GeneratorConfig& cfg, std::size_t n);

/// Named parameter sets: R1, R2 (Menezes samples), S1..S5 (FIPS samples),
/// U1, U2 (long-run samples). Lookup is case-insensitive.
std::optional<GeneratorConfig> preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace henonseq
