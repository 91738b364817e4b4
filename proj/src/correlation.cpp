#include "henonseq/correlation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "henonseq/errors.hpp"

namespace henonseq {

double correlation(const BitSequence& u, const BitSequence& v) {
    if (u.size() != v.size()) {
        throw LengthMismatch("correlation: lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()));
    }
    if (u.empty()) {
        throw EmptySequence("correlation of empty sequences");
    }
    const auto n = static_cast<long long>(u.size());
    const auto disagreements = static_cast<long long>(hamming_distance(u, v));
    const long long agreements = n - disagreements;
    return static_cast<double>(agreements - disagreements) / static_cast<double>(n);
}

double autocorrelation(const BitSequence& w, std::int64_t shift) {
    if (w.empty()) {
        throw EmptySequence("autocorrelation of an empty sequence");
    }
    return correlation(w, w.rotated_right(shift));
}

std::ptrdiff_t CorrelationPmf::index_of(double theta) const {
    if (length == 0 || !std::isfinite(theta)) {
        return -1;
    }
    // theta = 2r/N - 1  =>  r = N (theta + 1) / 2
    const double n = static_cast<double>(length);
    const double r = n * (theta + 1.0) / 2.0;
    const double nearest = std::round(r);
    if (nearest < 0.0 || nearest > n || std::fabs(r - nearest) > 1e-9) {
        return -1;
    }
    return static_cast<std::ptrdiff_t>(nearest);
}

double CorrelationPmf::at(double theta) const {
    const auto i = index_of(theta);
    return i < 0 ? 0.0 : probs[static_cast<std::size_t>(i)];
}

namespace {

CorrelationPmf make_support(std::size_t length, PmfKind kind) {
    if (length < 1) {
        throw std::invalid_argument("correlation pmf requires N >= 1");
    }
    CorrelationPmf out;
    out.length = length;
    out.kind = kind;
    out.support.resize(length + 1);
    out.probs.resize(length + 1);
    const auto n = static_cast<double>(length);
    for (std::size_t r = 0; r <= length; ++r) {
        out.support[r] = 2.0 * static_cast<double>(r) / n - 1.0;
    }
    return out;
}

}  // namespace

CorrelationPmf correlation_pmf_exact(std::size_t length) {
    CorrelationPmf out = make_support(length, PmfKind::ExactBinomial);
    const auto n = static_cast<double>(length);
    const double log_norm = std::lgamma(n + 1.0) - n * std::numbers::ln2;
    for (std::size_t r = 0; r <= length; ++r) {
        const auto k = static_cast<double>(r);
        out.probs[r] = std::exp(log_norm - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
    }
    return out;
}

CorrelationPmf correlation_pmf_normal(std::size_t length) {
    CorrelationPmf out = make_support(length, PmfKind::NormalApprox);
    const auto n = static_cast<double>(length);
    const double scale = std::sqrt(2.0 / (n * std::numbers::pi));
    for (std::size_t r = 0; r <= length; ++r) {
        const double t = out.support[r];
        out.probs[r] = scale * std::exp(-n * t * t / 2.0);
    }
    return out;
}

}  // namespace henonseq
