#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "henonseq/bit_sequence.hpp"

namespace henonseq {

struct BerlekampMasseyResult {
    std::size_t linear_complexity = 0;
    /// Connection polynomial coefficients c_0..c_L (c_0 = 1), so that
    /// s_n = sum_{i=1..L} c_i s_{n-i} for every n >= L.
    std::vector<Bit> connection;
};

/// Berlekamp-Massey over GF(2) on packed words. O(N^2 / 64).
BerlekampMasseyResult berlekamp_massey(const BitSequence& w);

/// Length of the shortest LFSR generating w; 0 for the all-zero (or empty) sequence.
std::size_t linear_complexity(const BitSequence& w);

/// Prefix complexities C_1..C_N from a single BMA pass.
std::vector<std::size_t> lc_profile(const BitSequence& w);

/// Heuristic distribution P(C = c) of the linear complexity of an N-bit
/// sequence, for c in 1..N-1:
///   0.5^(N - 2c + 1) on the lower branch, 0.5^(2c - N) on the upper branch,
/// where the lower branch is c <= N/2 for even N and c < (N+1)/2 for odd N.
/// Total mass is 1 - 2^(1-N).
struct LcDistribution {
    std::size_t length = 0;
    std::vector<double> pmf;  // indexed by c, size length + 1; pmf[0] = pmf[N] = 0

    double at(std::size_t c) const { return c < pmf.size() ? pmf[c] : 0.0; }
    double total_mass() const;
};

LcDistribution conjectured_pmf(std::size_t length);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // unbiased, n - 1 denominator
};

/// Throws InsufficientSamples for fewer than two samples.
Moments lc_moments(std::span<const std::size_t> samples);

}  // namespace henonseq
