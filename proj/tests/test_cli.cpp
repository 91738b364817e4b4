#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "henonseq/bit_file.hpp"
#include "henonseq/generator.hpp"
#include "henonseq/linear_complexity.hpp"

namespace fs = std::filesystem;

namespace henonseq {
namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / ("henonseq_cli_" + std::string(info->name()) + "_" +
                                            std::to_string(std::random_device{}()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    // Runs the CLI in-process with stdout captured and stderr discarded.
    int run(std::vector<std::string> args, std::string* out = nullptr) {
        args.insert(args.begin(), "henonseq");
        std::ostringstream captured;
        std::ostringstream errors;
        auto* old_out = std::cout.rdbuf(captured.rdbuf());
        auto* old_err = std::cerr.rdbuf(errors.rdbuf());
        const int code = cli::run(args);
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        if (out != nullptr) {
            *out = captured.str();
        }
        return code;
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p) {
        std::ifstream is(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
    }

    static void spit(const std::string& p, const std::string& data) {
        std::ofstream os(p, std::ios::binary);
        os << data;
    }

    fs::path dir_;
};

TEST_F(CliTest, GenerateZeroBits) {
    ASSERT_EQ(run({"generate", "--count", "0", "-o", path("z.bin")}), 0);
    EXPECT_EQ(fs::file_size(path("z.bin")), 16u);
}

TEST_F(CliTest, GenerateAsciiMatchesLibrary) {
    ASSERT_EQ(run({"generate", "--preset", "S3", "-n", "20000", "-f", "ascii", "-o", path("s3.txt")}), 0);
    const auto text = slurp(path("s3.txt"));
    ASSERT_EQ(text.size(), 20000u);
    EXPECT_EQ(text, generate(*preset("S3"), 20000).to_string());
}

TEST_F(CliTest, GenerateFlagsOverridePreset) {
    ASSERT_EQ(run({"generate", "--preset", "S3", "-P", "5", "-n", "100", "-f", "ascii", "-o", path("a.txt")}), 0);
    GeneratorConfig cfg = *preset("S3");
    cfg.decimation = 5;
    EXPECT_EQ(slurp(path("a.txt")), generate(cfg, 100).to_string());
}

TEST_F(CliTest, AnalyzeLc) {
    spit(path("w.txt"), "0000");
    std::string out;
    ASSERT_EQ(run({"analyze", "lc", path("w.txt")}, &out), 0);
    EXPECT_EQ(nlohmann::json::parse(out)["linear_complexity"], 0) << out;
}

TEST_F(CliTest, AnalyzeCorrOfIdenticalInputs) {
    ASSERT_EQ(run({"generate", "-n", "500", "-o", path("a.bin")}), 0);
    std::string out;
    ASSERT_EQ(run({"analyze", "corr", path("a.bin"), path("a.bin")}, &out), 0);
    EXPECT_EQ(nlohmann::json::parse(out)["theta"], 1.0) << out;
}

TEST_F(CliTest, AnalyzeAutocorrRowCount) {
    ASSERT_EQ(run({"generate", "-n", "3000", "-o", path("a.bin")}), 0);
    ASSERT_EQ(run({"analyze", "autocorr", path("a.bin"), "--bits", "2000", "-o", path("r.csv")}), 0);
    std::ifstream is(path("r.csv"));
    std::string line;
    std::size_t rows = 0;
    std::getline(is, line);
    EXPECT_EQ(line, "shift,R");
    while (std::getline(is, line)) ++rows;
    EXPECT_EQ(rows, 3999u);
}

TEST_F(CliTest, AnalyzeLcProfileMatchesLibrary) {
    ASSERT_EQ(run({"generate", "-n", "200", "-f", "csv", "-o", path("a.csv")}), 0);
    ASSERT_EQ(run({"analyze", "lc-profile", path("a.csv"), "-o", path("p.csv")}), 0);
    const auto profile = lc_profile(generate(GeneratorConfig{}, 200));
    std::ifstream is(path("p.csv"));
    std::string line;
    std::getline(is, line);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        ASSERT_TRUE(std::getline(is, line));
        EXPECT_EQ(line.substr(line.find(',') + 1).substr(0, std::to_string(profile[i]).size()),
                  std::to_string(profile[i]));
    }
}

TEST_F(CliTest, FipsExitCodes) {
    ASSERT_EQ(run({"generate", "--preset", "S1", "-n", "20000", "-o", path("ok.bin")}), 0);
    std::string out;
    EXPECT_EQ(run({"test", "fips", path("ok.bin")}, &out), 0);
    EXPECT_EQ(nlohmann::json::parse(out)["overall"], "pass");

    ASSERT_EQ(run({"generate", "-n", "19999", "-o", path("short.bin")}), 0);
    EXPECT_EQ(run({"test", "fips", path("short.bin")}), 2);

    std::string alternating;
    for (int i = 0; i < 10000; ++i) alternating += "10";
    spit(path("alt.txt"), alternating);
    EXPECT_EQ(run({"test", "fips", path("alt.txt")}), 1);
}

TEST_F(CliTest, MalformedInputIsUsageError) {
    spit(path("bad.bin"), "HNSQ\x09");
    EXPECT_EQ(run({"test", "fips", path("bad.bin")}), 2);
    EXPECT_EQ(run({"test", "fips", path("missing.bin")}), 2);
}

TEST_F(CliTest, Keyspace) {
    std::string out;
    ASSERT_EQ(run({"keyspace", "--epsilon", "1.1921e-7"}, &out), 0);
    EXPECT_NE(out.find("rounded = 97"), std::string::npos) << out;
    ASSERT_EQ(run({"keyspace", "--format", "json"}, &out), 0);
    EXPECT_EQ(nlohmann::json::parse(out)["log2_keyspace_rounded"], 213);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}), 2);
    EXPECT_EQ(run({"generate", "--seed1", "2"}), 2);
    EXPECT_EQ(run({"generate", "-P", "0"}), 2);
    EXPECT_EQ(run({"generate", "--preset", "nope"}), 2);
    EXPECT_EQ(run({"generate", "-f", "hex"}), 2);
    EXPECT_EQ(run({"frobnicate"}), 2);
    EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, DivergenceIsRuntimeError) {
    EXPECT_EQ(run({"generate", "--x0", "10", "-n", "10", "-o", path("d.bin")}), 3);
}

TEST_F(CliTest, CipherRoundTripViaFiles) {
    std::mt19937 rng(5);
    std::string msg(200000, '\0');
    for (auto& c : msg) c = static_cast<char>(rng());
    spit(path("m.bin"), msg);
    ASSERT_EQ(run({"cipher", "encrypt", "--preset", "U2", "-i", path("m.bin"), "-o", path("c.bin")}), 0);
    ASSERT_EQ(run({"cipher", "decrypt", "--preset", "U2", "-i", path("c.bin"), "-o", path("d.bin")}), 0);
    EXPECT_NE(slurp(path("c.bin")), msg);
    EXPECT_EQ(slurp(path("d.bin")), msg);
}

TEST_F(CliTest, CipherRoundTripViaShellPipe) {
    const std::string exe = HENONSEQ_CLI_PATH;
    spit(path("m.txt"), "attack at dawn\n");
    const std::string cmd = "\"" + exe + "\" cipher encrypt -i \"" + path("m.txt") + "\" 2>/dev/null | \"" + exe +
                            "\" cipher decrypt > \"" + path("d.txt") + "\" 2>/dev/null";
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_EQ(slurp(path("d.txt")), "attack at dawn\n");
}

TEST_F(CliTest, ExperimentWritesFigures) {
    std::string out;
    ASSERT_EQ(run({"experiment", "lc-even", "--bits", "16", "--trials", "10", "--out-dir", dir_.string()}, &out), 0);
    EXPECT_TRUE(fs::exists(dir_ / "fig2a.csv"));
    const auto j = nlohmann::json::parse(out);
    EXPECT_TRUE(j.contains("mean")) << out;
    ASSERT_EQ(run({"experiment", "attractor", "--points", "50", "--out-dir", dir_.string()}, &out), 0);
    EXPECT_TRUE(fs::exists(dir_ / "fig1.csv"));
}

TEST_F(CliTest, PresetsListing) {
    std::string out;
    ASSERT_EQ(run({"presets"}, &out), 0);
    const auto j = nlohmann::json::parse(out);
    EXPECT_EQ(j.size(), 9u);
    EXPECT_TRUE(j.contains("U1"));
}

}  // namespace
}  // namespace henonseq
