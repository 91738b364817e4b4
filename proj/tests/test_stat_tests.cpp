#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <random>
#include <string>

#include "henonseq/errors.hpp"
#include "henonseq/stat_tests.hpp"
#include "oracles.hpp"

namespace henonseq {
namespace {

// Textbook worked example: a 40-bit pattern repeated four times (n = 160).
BitSequence textbook_sequence() {
    const std::string block = "1110001100010001010011101111001001001001";
    return BitSequence::from_string(block + block + block + block);
}

TEST(ChiSquareTest, CriticalValues) {
    EXPECT_NEAR(chi_square_critical_99(1), 6.634897, 1e-6);
    EXPECT_NEAR(chi_square_critical_99(2), 9.210340, 1e-6);
    EXPECT_NEAR(chi_square_critical_99(3), 11.344867, 1e-6);
    EXPECT_NEAR(chi_square_critical_99(7), 18.475307, 1e-6);
}

TEST(MenezesTest, TextbookCounts) {
    const auto w = textbook_sequence();
    ASSERT_EQ(w.size(), 160u);
    EXPECT_EQ(w.count_ones(), 76u);
    const auto p = pair_counts(w);
    EXPECT_EQ(p.n00, 44u);
    EXPECT_EQ(p.n01, 40u);
    EXPECT_EQ(p.n10, 40u);
    EXPECT_EQ(p.n11, 35u);
    std::size_t k = 0;
    runs_statistic(w, &k);
    EXPECT_EQ(k, 3u);
    const auto rc = run_counts(w);
    EXPECT_EQ(rc.ones[1], 25u);
    EXPECT_EQ(rc.ones[2], 4u);
    EXPECT_EQ(rc.ones[3], 5u);
    EXPECT_EQ(rc.zeros[1], 8u);
    EXPECT_EQ(rc.zeros[2], 20u);
    EXPECT_EQ(rc.zeros[3], 12u);
}

TEST(MenezesTest, TextbookStatistics) {
    const auto w = textbook_sequence();
    EXPECT_NEAR(frequency_statistic(w), 0.4, 1e-12);
    EXPECT_NEAR(serial_statistic(w), 0.6252, 5e-5);
    EXPECT_NEAR(poker_statistic(w, 3), 9.6415, 5e-5);
    EXPECT_NEAR(runs_statistic(w), 31.7913, 5e-5);
    EXPECT_NEAR(autocorrelation_statistic(w, 8), 3.8933, 5e-5);

    const auto r = menezes_battery(w);
    EXPECT_EQ(r.battery, "menezes");
    EXPECT_FALSE(r.overall.has_value());
    EXPECT_EQ(r.entries.size(), 5u + 80u);
    EXPECT_TRUE(r.find("X1")->pass);
    EXPECT_TRUE(r.find("X2")->pass);
    EXPECT_TRUE(r.find("X3(3)")->pass);
    EXPECT_FALSE(r.find("X4")->pass);
    EXPECT_FALSE(r.find("X5(8)")->pass);
    EXPECT_EQ(r.find("X5(81)"), nullptr);
}

TEST(MenezesTest, SmallExamples) {
    const auto zeros = BitSequence(100, false);
    EXPECT_EQ(frequency_statistic(zeros), 100.0);

    std::string alternating;
    for (int i = 0; i < 50; ++i) alternating += "10";
    const auto a = BitSequence::from_string(alternating);
    EXPECT_EQ(frequency_statistic(a), 0.0);
    EXPECT_DOUBLE_EQ(autocorrelation_statistic(a, 1), 2.0 * (99.0 - 49.5) / std::sqrt(99.0));
    EXPECT_THROW(menezes_battery(BitSequence(99)), SequenceTooShort);
    EXPECT_THROW(autocorrelation_statistic(a, 0), std::invalid_argument);
}

TEST(MenezesTest, PairCountIdentityAndNonNegativity) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto w = oracle::random_bits(rng, 100 + rng() % 900);
        const auto p = pair_counts(w);
        ASSERT_EQ(p.n00 + p.n01 + p.n10 + p.n11, w.size() - 1);
        const auto blocks = block_counts(w, 3);
        std::size_t total = 0;
        for (auto c : blocks) total += c;
        ASSERT_EQ(total, w.size() / 3);
        ASSERT_GE(frequency_statistic(w), 0.0);
        ASSERT_GE(poker_statistic(w, 2), -1e-9);
        ASSERT_GE(runs_statistic(w), 0.0);
    }
}

TEST(FipsTest, AlternatingSequence) {
    std::string s;
    for (int i = 0; i < 10000; ++i) s += "10";
    const auto r = fips140_1(BitSequence::from_string(s));
    EXPECT_EQ(r.battery, "fips140-1");
    EXPECT_EQ(r.find("n1")->value, 10000.0);
    EXPECT_TRUE(r.find("n1")->pass);
    EXPECT_EQ(r.find("B1")->value, 10000.0);
    EXPECT_EQ(r.find("G1")->value, 10000.0);
    EXPECT_FALSE(r.find("B1")->pass);
    EXPECT_EQ(r.find("long_run")->value, 1.0);
    EXPECT_EQ(r.overall, std::optional<bool>(false));
    // Poker: blocks are all 1010, X3 = 16/5000 * 5000^2 - 5000.
    EXPECT_DOUBLE_EQ(r.find("X3")->value, 75000.0);
}

TEST(FipsTest, MonobitBoundaryIsExclusive) {
    std::mt19937_64 rng(3);
    // Place exactly 9654 ones at random positions.
    std::vector<int> pos(20000);
    for (int i = 0; i < 20000; ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    BitSequence w(20000);
    for (int i = 0; i < 9654; ++i) w.set(pos[i], true);
    const auto r = fips140_1(w);
    EXPECT_EQ(r.find("n1")->value, 9654.0);
    EXPECT_FALSE(r.find("n1")->pass);
    EXPECT_EQ(r.overall, std::optional<bool>(false));
    w.set(pos[9654], true);
    EXPECT_TRUE(fips140_1(w).find("n1")->pass);
}

TEST(FipsTest, LongRunThreshold) {
    std::mt19937_64 rng(4);
    auto w = oracle::random_bits(rng, 20000);
    for (int i = 0; i < 34; ++i) w.set(1000 + i, true);
    w.set(999, false);
    w.set(1034, false);
    const auto r = fips140_1(w);
    EXPECT_GE(r.find("long_run")->value, 34.0);
    EXPECT_FALSE(r.find("long_run")->pass);
    EXPECT_EQ(r.overall, std::optional<bool>(false));
}

TEST(FipsTest, WrongLength) {
    EXPECT_THROW(fips140_1(BitSequence(19999)), WrongLength);
    EXPECT_THROW(fips140_1(BitSequence(20001)), WrongLength);
}

TEST(FipsTest, ReferenceSourcePassRate) {
    std::mt19937_64 rng(20240601);
    int passes = 0;
    constexpr int kTrials = 10000;
    for (int t = 0; t < kTrials; ++t) {
        passes += fips140_1(oracle::random_bits(rng, 20000)).overall.value() ? 1 : 0;
    }
    EXPECT_GE(static_cast<double>(passes) / kTrials, 0.99);
}

TEST(ReportTest, JsonAndCsv) {
    std::mt19937_64 rng(6);
    const auto r = fips140_1(oracle::random_bits(rng, 20000));
    const auto j = nlohmann::json::parse(to_json(r));
    EXPECT_EQ(j["battery"], "fips140-1");
    EXPECT_EQ(j["entries"].size(), 15u);
    EXPECT_EQ(j["entries"][0]["statistic"], "n1");
    EXPECT_TRUE(j["overall"] == "pass" || j["overall"] == "fail");
    const auto csv = to_csv(r);
    EXPECT_EQ(csv.rfind("statistic,value,bound,verdict\n", 0), 0u);

    const auto m = nlohmann::json::parse(to_json(menezes_battery(textbook_sequence())));
    EXPECT_TRUE(m["overall"].is_null());
}

}  // namespace
}  // namespace henonseq
