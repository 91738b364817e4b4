#pragma once

#include <cstdint>

namespace henonseq {

inline constexpr double kEpsilonFloat32 = 1.1921e-7;
inline constexpr double kEpsilonFloat64 = 2.2204e-16;

/// Interval widths of the key parameters and the platform's smallest increment.
struct KeyspaceSpec {
    double alpha_width = 1.41 - 1.16;
    double beta_width = 0.3 - 0.2;
    double x0_width = 1.0 - (-1.0);
    double y0_width = 0.35 - (-0.35);
    std::uint64_t p_count = 1000 - 80;
    double epsilon = kEpsilonFloat64;

    void validate() const;
};

/// log2 of alpha_width/eps * beta_width/eps * x0_width/eps * y0_width/eps * p_count,
/// summed term by term in the log domain.
double keyspace_bits(const KeyspaceSpec& spec);

}  // namespace henonseq
