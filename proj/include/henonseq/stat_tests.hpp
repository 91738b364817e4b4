#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "henonseq/bit_sequence.hpp"

namespace henonseq {

struct TestEntry {
    std::string name;
    double value = 0.0;
    std::string bound;  // human-readable acceptance region, e.g. "< 6.634897"
    bool pass = false;
};

struct TestReport {
    std::string battery;
    std::vector<TestEntry> entries;
    /// Set for batteries with a single verdict (FIPS 140-1); the Menezes
    /// battery reports per-statistic verdicts only and leaves this empty.
    std::optional<bool> overall;

    std::size_t failures() const;
    const TestEntry* find(const std::string& name) const;
};

/// Upper 1% point of the chi-square distribution.
double chi_square_critical_99(double degrees_of_freedom);

// Building blocks, exposed for the bookkeeping identities.

struct PairCounts {
    std::size_t n00 = 0, n01 = 0, n10 = 0, n11 = 0;
};
/// Overlapping pairs (w_i, w_{i+1}); the four counts sum to n - 1.
PairCounts pair_counts(const BitSequence& w);

/// Non-overlapping m-bit blocks, pattern read MSB-first. Sums to floor(n/m).
std::vector<std::size_t> block_counts(const BitSequence& w, unsigned m);

/// Raw run-length histogram, index = run length (index 0 unused).
struct RunCounts {
    std::vector<std::size_t> ones;   // blocks
    std::vector<std::size_t> zeros;  // gaps
    std::size_t longest = 0;
};
RunCounts run_counts(const BitSequence& w);

double frequency_statistic(const BitSequence& w);
double serial_statistic(const BitSequence& w);
double poker_statistic(const BitSequence& w, unsigned m);
/// Runs statistic over lengths 1..K where K is the largest i with
/// e_i = (n - i + 3) / 2^(i+2) >= 5. K is written to *k_out when given.
double runs_statistic(const BitSequence& w, std::size_t* k_out = nullptr);
/// 2 (A(d) - (n-d)/2) / sqrt(n-d), A(d) = #{i : w_i != w_{i+d}}, non-cyclic.
double autocorrelation_statistic(const BitSequence& w, std::size_t d);

inline constexpr std::size_t kMenezesMinLength = 100;
inline constexpr double kMenezesAutocorrBound = 2.326348;

/// Frequency, serial, poker (m = 2, 3), runs and autocorrelation (every
/// d = 1..floor(n/2)) at the 1% significance level. Throws SequenceTooShort
/// below 100 bits.
TestReport menezes_battery(const BitSequence& w);

inline constexpr std::size_t kFipsLength = 20000;
inline constexpr std::size_t kFipsLongRun = 34;

struct FipsInterval {
    double low;
    double high;
    bool contains(double v) const noexcept { return low < v && v < high; }
};
inline constexpr FipsInterval kFipsMonobit{9654, 10346};
inline constexpr FipsInterval kFipsPoker{1.03, 57.40};
/// Run-length intervals for lengths 1..5 and >= 6 (same for ones and zeros).
inline constexpr std::array<FipsInterval, 6> kFipsRuns{{
    {2267, 2733}, {1079, 1421}, {502, 748}, {223, 402}, {90, 223}, {90, 223}}};

/// Monobit, poker, runs and long-run tests on exactly 20000 bits. All
/// intervals are open. Throws WrongLength otherwise.
TestReport fips140_1(const BitSequence& w);

std::string to_json(const TestReport& report);
/// Header "statistic,value,bound,verdict" then one row per entry.
std::string to_csv(const TestReport& report);

}  // namespace henonseq
