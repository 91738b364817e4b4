#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "henonseq/bit_sequence.hpp"
#include "henonseq/correlation.hpp"
#include "henonseq/generator.hpp"
#include "henonseq/linear_complexity.hpp"

namespace henonseq {

struct Histogram {
    std::vector<double> labels;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    /// counts / total; all zeros when the histogram is empty.
    std::vector<double> frequencies() const;
};

/// 0.5 * sum |p_i - q_i| over the common index range (missing entries count as 0).
double total_variation(std::span<const double> p, std::span<const double> q);

/// How a population of sequences is drawn from a configuration.
enum class Sampling {
    /// Consecutive disjoint windows of one output stream.
    DisjointWindows,
    /// One fresh generator per window, x0 shifted by perturbed_x0().
    PerturbedStart,
};

/// SplitMix64 finalizer (Steele, Lea, Flood 2014):
///   z += 0x9e3779b97f4a7c15; z = (z ^ z>>30) * 0xbf58476d1ce4e5b9;
///   z = (z ^ z>>27) * 0x94d049bb133111eb; return z ^ z>>31.
std::uint64_t mix64(std::uint64_t z) noexcept;

inline constexpr double kPerturbationSpread = 0.01;

/// x0 + spread * (2u - 1) with u = top 53 bits of mix64(trial) / 2^53, so the
/// start moves by less than 0.01 and trial t always gets the same shift.
double perturbed_x0(double x0, std::uint64_t trial) noexcept;

struct ExperimentOptions {
    Sampling sampling = Sampling::DisjointWindows;
    unsigned jobs = 1;
};

/// Output of sample_windows plus the bookkeeping needed to verify it.
struct WindowSample {
    std::vector<BitSequence> windows;
    std::uint64_t bits_generated = 0;
    std::uint64_t iterations = 0;  // total map iterations across all generators
};

WindowSample sample_windows(const GeneratorConfig& cfg, std::size_t bits, std::size_t count,
                            Sampling sampling, unsigned jobs = 1);

/// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

struct LcExperiment {
    std::size_t length = 0;
    std::vector<std::size_t> complexities;  // in window order
    Histogram histogram;                    // labels c = 0..N
    Moments moments;
    LcDistribution conjectured;
    double tv_distance = 0.0;  // histogram vs conjectured
    std::uint64_t bits_generated = 0;
};

LcExperiment lc_histogram(std::span<const BitSequence> windows, std::size_t length, unsigned jobs = 1);
LcExperiment lc_experiment(const GeneratorConfig& cfg, std::size_t length, std::size_t trials,
                           const ExperimentOptions& opts = {});

struct CorrExperiment {
    std::size_t length = 0;
    Histogram histogram;  // labels = attainable theta values, ascending
    CorrelationPmf reference;  // normal approximation on the same support
    double tv_distance = 0.0;
    std::uint64_t bits_generated = 0;
};

/// Pairs windows (0,1), (2,3), ... Throws if the count is odd or zero.
CorrExperiment corr_histogram(std::span<const BitSequence> windows, std::size_t length);
CorrExperiment corr_experiment(const GeneratorConfig& cfg, std::size_t length, std::size_t pairs,
                               const ExperimentOptions& opts = {});

/// (j, R(j)) for j = -(N-1) .. N-1.
std::vector<std::pair<std::int64_t, double>> autocorr_trace(const BitSequence& w, unsigned jobs = 1);
std::vector<std::pair<std::int64_t, double>> autocorr_trace(const GeneratorConfig& cfg, std::size_t length,
                                                            unsigned jobs = 1);

struct FipsRate {
    std::size_t trials = 0;
    std::size_t passes = 0;
    double rate() const { return trials == 0 ? 0.0 : static_cast<double>(passes) / static_cast<double>(trials); }
};

/// FIPS 140-1 overall pass rate over `trials` 20000-bit sequences.
FipsRate fips_pass_rate(const GeneratorConfig& cfg, std::size_t trials, const ExperimentOptions& opts = {});

}  // namespace henonseq
