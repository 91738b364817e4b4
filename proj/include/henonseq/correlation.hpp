#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "henonseq/bit_sequence.hpp"

namespace henonseq {

/// theta = (agreements - disagreements) / N. Throws LengthMismatch or EmptySequence.
double correlation(const BitSequence& u, const BitSequence& v);

/// Cyclic autocorrelation R(j) = theta(w, w rotated right by j). Negative j
/// rotates left; j is reduced mod N, so R is defined on all integers.
double autocorrelation(const BitSequence& w, std::int64_t shift);

enum class PmfKind { ExactBinomial, NormalApprox };

/// Distribution of theta for two independent uniform N-bit sequences.
///
/// support[r] = 2r/N - 1 for r = 0..N (agreements A = r); that is
/// {0, +-2/N, ..., +-1} for even N and {+-1/N, +-3/N, ..., +-1} for odd N.
struct CorrelationPmf {
    std::size_t length = 0;
    PmfKind kind = PmfKind::ExactBinomial;
    std::vector<double> support;
    std::vector<double> probs;

    /// Probability of theta; zero off the attainable support.
    double at(double theta) const;
    /// Support index of theta, or -1 when theta is not attainable.
    std::ptrdiff_t index_of(double theta) const;
};

/// P(A = r) = C(N, r) / 2^N, evaluated through lgamma.
CorrelationPmf correlation_pmf_exact(std::size_t length);
/// sqrt(2 / (N pi)) * exp(-N theta^2 / 2) on the support.
CorrelationPmf correlation_pmf_normal(std::size_t length);

}  // namespace henonseq
