#include "cli_app.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "henonseq/bit_file.hpp"
#include "henonseq/cipher.hpp"
#include "henonseq/correlation.hpp"
#include "henonseq/errors.hpp"
#include "henonseq/experiments.hpp"
#include "henonseq/generator.hpp"
#include "henonseq/keyspace.hpp"
#include "henonseq/linear_complexity.hpp"
#include "henonseq/stat_tests.hpp"

namespace henonseq::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parsed but not yet resolved; unset fields fall back to the preset.
struct GeneratorFlags {
    std::string preset = "U1";
    std::optional<double> alpha, beta, x0, y0, bound;
    std::optional<std::uint64_t> decimation, calibration, discard;
    std::optional<int> seed2, seed1;
};

void add_generator_flags(CLI::App* app, GeneratorFlags& f) {
    app->add_option("--preset", f.preset, "Named parameter set (R1 R2 S1-S5 U1 U2)")->capture_default_str();
    app->add_option("--alpha", f.alpha, "Map coefficient alpha");
    app->add_option("--beta", f.beta, "Map coefficient beta");
    app->add_option("--x0", f.x0, "Initial x");
    app->add_option("--y0", f.y0, "Initial y");
    app->add_option("-P,--decimation", f.decimation, "Keep every P-th extracted bit")->check(CLI::PositiveNumber);
    app->add_option("-T,--calibration", f.calibration, "Median window length")->check(CLI::PositiveNumber);
    app->add_option("--discard", f.discard, "Transient iterations before calibration");
    app->add_option("--seed2", f.seed2, "History bit B_y(-2)")->check(CLI::Range(0, 1));
    app->add_option("--seed1", f.seed1, "History bit B_y(-1)")->check(CLI::Range(0, 1));
    app->add_option("--bound", f.bound, "Divergence bound on |x|, |y|");
}

GeneratorConfig resolve(const GeneratorFlags& f) {
    auto base = preset(f.preset);
    if (!base) {
        throw UsageError("--preset: unknown preset '" + f.preset + "'");
    }
    GeneratorConfig cfg = *base;
    if (f.alpha) cfg.params.alpha = *f.alpha;
    if (f.beta) cfg.params.beta = *f.beta;
    if (f.x0) cfg.params.x0 = *f.x0;
    if (f.y0) cfg.params.y0 = *f.y0;
    if (f.decimation) cfg.decimation = *f.decimation;
    if (f.calibration) cfg.calibration = *f.calibration;
    if (f.discard) cfg.discard = *f.discard;
    if (f.seed2) cfg.seed2 = static_cast<Bit>(*f.seed2);
    if (f.seed1) cfg.seed1 = static_cast<Bit>(*f.seed1);
    if (f.bound) cfg.bound = *f.bound;

    const auto finite = [](double v, const char* flag) {
        if (!std::isfinite(v)) {
            throw UsageError(std::string(flag) + ": value must be finite");
        }
    };
    finite(cfg.params.alpha, "--alpha");
    finite(cfg.params.beta, "--beta");
    finite(cfg.params.x0, "--x0");
    finite(cfg.params.y0, "--y0");
    if (!(cfg.bound > 0.0) || !std::isfinite(cfg.bound)) {
        throw UsageError("--bound: must be positive and finite");
    }
    return cfg;
}

std::string exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json config_json(const GeneratorConfig& cfg) {
    json j;
    j["alpha"] = cfg.params.alpha;
    j["beta"] = cfg.params.beta;
    j["x0"] = cfg.params.x0;
    j["y0"] = cfg.params.y0;
    j["P"] = cfg.decimation;
    j["T"] = cfg.calibration;
    j["discard"] = cfg.discard;
    j["seed2"] = cfg.seed2;
    j["seed1"] = cfg.seed1;
    j["bound"] = cfg.bound;
    return j;
}

// The effective configuration goes to stderr so stdout stays a clean data stream.
void print_config(const std::string& command, const std::vector<std::pair<std::string, std::string>>& items) {
    std::cerr << "# henonseq " << command << '\n';
    for (const auto& [k, v] : items) {
        std::cerr << "#   " << k << " = " << v << '\n';
    }
}

std::vector<std::pair<std::string, std::string>> config_items(const GeneratorConfig& cfg) {
    return {{"alpha", exact(cfg.params.alpha)}, {"beta", exact(cfg.params.beta)},
            {"x0", exact(cfg.params.x0)},       {"y0", exact(cfg.params.y0)},
            {"P", std::to_string(cfg.decimation)}, {"T", std::to_string(cfg.calibration)},
            {"discard", std::to_string(cfg.discard)}, {"seed2", std::to_string(cfg.seed2)},
            {"seed1", std::to_string(cfg.seed1)}, {"bound", exact(cfg.bound)}};
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    write(os);
    if (!os) {
        throw std::runtime_error("failed writing " + path);
    }
}

BitSequence load_bits(const std::string& path, const std::string& format) {
    std::optional<BitFormat> f;
    if (format != "auto") {
        f = parse_bit_format(format);
        if (!f) {
            throw UsageError("--input-format: unknown format '" + format + "'");
        }
    }
    if (path == "-") {
        std::cin >> std::noskipws;
        return f ? read_bits(std::cin, *f) : read_bits_auto(std::cin);
    }
    return read_bit_file(path, f);
}

unsigned default_jobs() {
    if (const char* env = std::getenv("HENONSEQ_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
        throw UsageError("HENONSEQ_JOBS: expected a positive integer, got '" + std::string(env) + "'");
    }
    return 1;
}

// ---------------------------------------------------------------- generate

struct GenerateCmd {
    GeneratorFlags gen;
    std::size_t count = 20000;
    std::string format = "packed";
    std::string out;
};

int run_generate(const GenerateCmd& c) {
    const GeneratorConfig cfg = resolve(c.gen);
    const auto fmt = parse_bit_format(c.format);
    if (!fmt) {
        throw UsageError("--format: unknown format '" + c.format + "'");
    }
    auto items = config_items(cfg);
    items.emplace_back("count", std::to_string(c.count));
    items.emplace_back("format", std::string(format_name(*fmt)));
    print_config("generate", items);
    const BitSequence bits = generate(cfg, c.count);
    with_output(c.out, [&](std::ostream& os) { write_bits(os, bits, *fmt); });
    return kSuccess;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeCmd {
    std::string kind;
    std::vector<std::string> inputs;
    std::string input_format = "auto";
    std::string format;
    std::string out;
    std::size_t bits = 0;  // 0 = whole input
};

int run_analyze(const AnalyzeCmd& c) {
    const bool two_inputs = c.kind == "corr";
    if (c.inputs.size() != (two_inputs ? 2u : 1u)) {
        throw UsageError("analyze " + c.kind + ": expected " + (two_inputs ? "two input files" : "one input file"));
    }
    std::string format = c.format;
    if (format.empty()) {
        format = (c.kind == "lc" || c.kind == "corr") ? "json" : "csv";
    }
    if (format != "json" && format != "csv") {
        throw UsageError("--format: expected json or csv");
    }
    std::vector<std::pair<std::string, std::string>> items{{"analysis", c.kind}};
    for (const auto& in : c.inputs) {
        items.emplace_back("input", in);
    }
    items.emplace_back("input-format", c.input_format);
    items.emplace_back("bits", c.bits == 0 ? "all" : std::to_string(c.bits));
    print_config("analyze", items);

    std::vector<BitSequence> seqs;
    for (const auto& in : c.inputs) {
        BitSequence s = load_bits(in, c.input_format);
        if (c.bits != 0) {
            if (c.bits > s.size()) {
                throw UsageError("--bits: input " + in + " holds only " + std::to_string(s.size()) + " bits");
            }
            s = s.slice(0, c.bits);
        }
        seqs.push_back(std::move(s));
    }

    std::ostringstream os;
    if (c.kind == "lc") {
        const auto r = berlekamp_massey(seqs[0]);
        std::string poly;
        for (auto b : r.connection) {
            poly.push_back(b ? '1' : '0');
        }
        if (format == "json") {
            json j;
            j["analysis"] = "lc";
            j["bits"] = seqs[0].size();
            j["linear_complexity"] = r.linear_complexity;
            j["connection_polynomial"] = poly;
            os << j.dump(2) << '\n';
        } else {
            os << "bits,linear_complexity,connection_polynomial\n"
               << seqs[0].size() << ',' << r.linear_complexity << ',' << poly << '\n';
        }
    } else if (c.kind == "lc-profile") {
        const auto profile = lc_profile(seqs[0]);
        if (format == "json") {
            json j;
            j["analysis"] = "lc-profile";
            j["bits"] = seqs[0].size();
            j["profile"] = profile;
            os << j.dump(2) << '\n';
        } else {
            os << "i,C_i\n";
            for (std::size_t i = 0; i < profile.size(); ++i) {
                os << (i + 1) << ',' << profile[i] << '\n';
            }
        }
    } else if (c.kind == "corr") {
        const double theta = correlation(seqs[0], seqs[1]);
        if (format == "json") {
            json j;
            j["analysis"] = "corr";
            j["bits"] = seqs[0].size();
            j["theta"] = theta;
            os << j.dump(2) << '\n';
        } else {
            os << "bits,theta\n" << seqs[0].size() << ',' << exact(theta) << '\n';
        }
    } else if (c.kind == "autocorr") {
        const auto trace = autocorr_trace(seqs[0]);
        if (format == "json") {
            json j;
            j["analysis"] = "autocorr";
            j["bits"] = seqs[0].size();
            j["trace"] = json::array();
            for (const auto& [shift, r] : trace) {
                j["trace"].push_back({shift, r});
            }
            os << j.dump(2) << '\n';
        } else {
            os << "shift,R\n";
            for (const auto& [shift, r] : trace) {
                os << shift << ',' << exact(r) << '\n';
            }
        }
    } else {
        throw UsageError("analyze: unknown analysis '" + c.kind + "'");
    }
    with_output(c.out, [&](std::ostream& o) { o << os.str(); });
    return kSuccess;
}

// -------------------------------------------------------------------- test

struct TestCmd {
    std::string battery;
    std::string input;
    std::string input_format = "auto";
    std::string format = "json";
    std::string out;
};

int run_test(const TestCmd& c) {
    print_config("test", {{"battery", c.battery}, {"input", c.input}, {"input-format", c.input_format}});
    const BitSequence bits = load_bits(c.input, c.input_format);
    TestReport report;
    if (c.battery == "fips") {
        report = fips140_1(bits);
    } else if (c.battery == "menezes") {
        report = menezes_battery(bits);
    } else {
        throw UsageError("test: unknown battery '" + c.battery + "'");
    }
    if (c.format != "json" && c.format != "csv") {
        throw UsageError("--format: expected json or csv");
    }
    const std::string text = c.format == "json" ? to_json(report) + "\n" : to_csv(report);
    with_output(c.out, [&](std::ostream& os) { os << text; });
    const bool pass = report.overall.value_or(report.failures() == 0);
    return pass ? kSuccess : kBatteryFail;
}

// -------------------------------------------------------------- experiment

struct ExperimentCmd {
    std::string name;
    GeneratorFlags gen;
    std::optional<std::size_t> bits;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> pairs;
    std::size_t points = 10000;
    std::string sampling;
    std::string out_dir = ".";
    std::optional<unsigned> jobs;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    os << text;
}

int run_experiment(const ExperimentCmd& c) {
    const GeneratorConfig cfg = resolve(c.gen);
    ExperimentOptions opts;
    opts.jobs = c.jobs.value_or(default_jobs());
    std::string sampling = c.sampling;
    if (sampling.empty()) {
        sampling = c.name == "fips-rate" ? "perturbed" : "windows";
    }
    if (sampling == "windows") {
        opts.sampling = Sampling::DisjointWindows;
    } else if (sampling == "perturbed") {
        opts.sampling = Sampling::PerturbedStart;
    } else {
        throw UsageError("--sampling: expected windows or perturbed");
    }

    std::size_t default_bits = 0;
    if (c.name == "lc-even") default_bits = 64;
    else if (c.name == "lc-odd") default_bits = 65;
    else if (c.name == "lc-profile") default_bits = 553;
    else if (c.name == "corr") default_bits = 127;
    else if (c.name == "autocorr") default_bits = 2000;
    else if (c.name == "fips-rate") default_bits = kFipsLength;
    else if (c.name != "attractor") {
        throw UsageError("experiment: unknown experiment '" + c.name + "'");
    }
    const std::size_t bits = c.bits.value_or(default_bits);
    if (c.name == "fips-rate" && bits != kFipsLength) {
        throw UsageError("--bits: fips-rate always uses 20000-bit sequences");
    }
    const std::size_t trials = c.trials.value_or(c.name == "fips-rate" ? 1000 : 2000);
    const std::size_t pairs = c.pairs.value_or(10000);

    auto items = config_items(cfg);
    items.emplace_back("experiment", c.name);
    if (c.name == "attractor") {
        items.emplace_back("points", std::to_string(c.points));
    } else {
        items.emplace_back("bits", std::to_string(bits));
    }
    if (c.name == "lc-even" || c.name == "lc-odd" || c.name == "fips-rate") {
        items.emplace_back("trials", std::to_string(trials));
    }
    if (c.name == "corr") {
        items.emplace_back("pairs", std::to_string(pairs));
    }
    items.emplace_back("sampling", sampling);
    items.emplace_back("out-dir", c.out_dir);
    print_config("experiment", items);

    const std::filesystem::path dir(c.out_dir);
    std::filesystem::create_directories(dir);

    json summary;
    summary["experiment"] = c.name;
    summary["config"] = config_json(cfg);
    summary["sampling"] = sampling;
    json files = json::array();

    if (c.name == "attractor") {
        Orbit orbit(cfg.params, cfg.bound);
        for (std::uint64_t i = 0; i < cfg.discard; ++i) {
            orbit.next();
        }
        std::ostringstream os;
        os << "x,y\n";
        for (std::size_t i = 0; i < c.points; ++i) {
            const State& s = orbit.next();
            os << exact(s.x) << ',' << exact(s.y) << '\n';
        }
        write_file(dir / "fig1.csv", os.str());
        files.push_back("fig1.csv");
        summary["points"] = c.points;
    } else if (c.name == "lc-even" || c.name == "lc-odd") {
        const auto r = lc_experiment(cfg, bits, trials, opts);
        const std::string stem = c.name == "lc-even" ? "fig2" : "fig3";
        std::ostringstream a;
        std::ostringstream b;
        a << "c,count,frequency\n";
        b << "c,probability\n";
        const auto freq = r.histogram.frequencies();
        for (std::size_t i = 0; i < r.histogram.counts.size(); ++i) {
            a << i << ',' << r.histogram.counts[i] << ',' << exact(freq[i]) << '\n';
            b << i << ',' << exact(r.conjectured.at(i)) << '\n';
        }
        write_file(dir / (stem + "a.csv"), a.str());
        write_file(dir / (stem + "b.csv"), b.str());
        files.push_back(stem + "a.csv");
        files.push_back(stem + "b.csv");
        summary["bits"] = bits;
        summary["trials"] = trials;
        summary["mean"] = r.moments.mean;
        summary["variance"] = r.moments.variance;
        summary["tv_distance"] = r.tv_distance;
    } else if (c.name == "lc-profile") {
        const auto profile = lc_profile(generate(cfg, bits));
        std::ostringstream os;
        os << "i,C_i,half_i\n";
        double worst = 0.0;
        for (std::size_t i = 0; i < profile.size(); ++i) {
            const double half = static_cast<double>(i + 1) / 2.0;
            worst = std::max(worst, std::fabs(static_cast<double>(profile[i]) - half));
            os << (i + 1) << ',' << profile[i] << ',' << exact(half) << '\n';
        }
        write_file(dir / "fig4.csv", os.str());
        files.push_back("fig4.csv");
        summary["bits"] = bits;
        summary["max_deviation_from_half"] = worst;
    } else if (c.name == "corr") {
        const auto r = corr_experiment(cfg, bits, pairs, opts);
        const auto exact_pmf = correlation_pmf_exact(bits);
        const auto freq = r.histogram.frequencies();
        std::ostringstream os;
        os << "theta,count,frequency,normal_approx,exact_binomial\n";
        for (std::size_t i = 0; i < r.histogram.counts.size(); ++i) {
            os << exact(r.histogram.labels[i]) << ',' << r.histogram.counts[i] << ',' << exact(freq[i]) << ','
               << exact(r.reference.probs[i]) << ',' << exact(exact_pmf.probs[i]) << '\n';
        }
        write_file(dir / "fig5.csv", os.str());
        files.push_back("fig5.csv");
        summary["bits"] = bits;
        summary["pairs"] = pairs;
        summary["tv_distance"] = r.tv_distance;
    } else if (c.name == "autocorr") {
        const auto trace = autocorr_trace(cfg, bits, opts.jobs);
        std::ostringstream os;
        os << "shift,R\n";
        double worst = 0.0;
        for (const auto& [shift, r] : trace) {
            os << shift << ',' << exact(r) << '\n';
            if (shift % static_cast<std::int64_t>(bits) != 0) {
                worst = std::max(worst, std::fabs(r));
            }
        }
        write_file(dir / "fig6.csv", os.str());
        files.push_back("fig6.csv");
        summary["bits"] = bits;
        summary["max_offpeak_abs_R"] = worst;
    } else {
        const auto r = fips_pass_rate(cfg, trials, opts);
        summary["trials"] = r.trials;
        summary["passes"] = r.passes;
        summary["pass_rate"] = r.rate();
    }
    summary["files"] = files;
    std::cout << summary.dump(2) << '\n';
    return kSuccess;
}

// ---------------------------------------------------------------- keyspace

struct KeyspaceCmd {
    KeyspaceSpec spec;
    double alpha_min = 1.16, alpha_max = 1.41;
    double beta_min = 0.2, beta_max = 0.3;
    double x0_min = -1.0, x0_max = 1.0;
    double y0_min = -0.35, y0_max = 0.35;
    std::uint64_t p_min = 80, p_max = 1000;
    std::string format = "text";
};

int run_keyspace(KeyspaceCmd c) {
    c.spec.alpha_width = c.alpha_max - c.alpha_min;
    c.spec.beta_width = c.beta_max - c.beta_min;
    c.spec.x0_width = c.x0_max - c.x0_min;
    c.spec.y0_width = c.y0_max - c.y0_min;
    if (c.p_max <= c.p_min) {
        throw UsageError("--p-max: must exceed --p-min");
    }
    c.spec.p_count = c.p_max - c.p_min;
    print_config("keyspace", {{"alpha", "(" + exact(c.alpha_min) + ", " + exact(c.alpha_max) + ")"},
                              {"beta", "(" + exact(c.beta_min) + ", " + exact(c.beta_max) + ")"},
                              {"x0", "(" + exact(c.x0_min) + ", " + exact(c.x0_max) + ")"},
                              {"y0", "(" + exact(c.y0_min) + ", " + exact(c.y0_max) + ")"},
                              {"P", "(" + std::to_string(c.p_min) + ", " + std::to_string(c.p_max) + ")"},
                              {"epsilon", exact(c.spec.epsilon)}});
    double bits = 0.0;
    try {
        bits = keyspace_bits(c.spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const long rounded = std::lround(bits);
    if (c.format == "json") {
        json j;
        j["log2_keyspace"] = bits;
        j["log2_keyspace_rounded"] = rounded;
        std::cout << j.dump(2) << '\n';
    } else if (c.format == "text") {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", bits);
        std::cout << "log2(K) = " << buf << '\n' << "rounded = " << rounded << '\n';
    } else {
        throw UsageError("--format: expected text or json");
    }
    return kSuccess;
}

// ------------------------------------------------------------------ cipher

struct CipherCmd {
    std::string mode;
    GeneratorFlags gen;
    std::string in = "-";
    std::string out = "-";
};

int run_cipher(const CipherCmd& c) {
    const GeneratorConfig cfg = resolve(c.gen);
    auto items = config_items(cfg);
    items.emplace_back("mode", c.mode);
    items.emplace_back("in", c.in);
    items.emplace_back("out", c.out);
    print_config("cipher", items);

    std::ifstream file_in;
    std::istream* is = &std::cin;
    if (c.in != "-") {
        file_in.open(c.in, std::ios::binary);
        if (!file_in) {
            throw UsageError("--in: cannot open " + c.in);
        }
        is = &file_in;
    }
    VernamStream stream(cfg);
    with_output(c.out, [&](std::ostream& os) {
        std::vector<char> buf(1 << 16);
        while (*is) {
            is->read(buf.data(), static_cast<std::streamsize>(buf.size()));
            const auto got = static_cast<std::size_t>(is->gcount());
            if (got == 0) {
                break;
            }
            auto* bytes = reinterpret_cast<std::uint8_t*>(buf.data());
            stream.apply(std::span(bytes, got));
            os.write(buf.data(), static_cast<std::streamsize>(got));
        }
    });
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Hénon map pseudorandom bit sequences and randomness analysis", "henonseq"};
    app.require_subcommand(1);

    GenerateCmd gen_cmd;
    auto* gen = app.add_subcommand("generate", "Generate a Hénon map bit sequence");
    add_generator_flags(gen, gen_cmd.gen);
    gen->add_option("-n,--count", gen_cmd.count, "Number of output bits")->capture_default_str();
    gen->add_option("-f,--format", gen_cmd.format, "packed | ascii | csv | raw")->capture_default_str();
    gen->add_option("-o,--out", gen_cmd.out, "Output path (default stdout)");

    AnalyzeCmd an_cmd;
    auto* an = app.add_subcommand("analyze", "Linear complexity and correlation analyses");
    an->add_option("analysis", an_cmd.kind, "lc | lc-profile | corr | autocorr")
        ->required()
        ->check(CLI::IsMember({"lc", "lc-profile", "corr", "autocorr"}));
    an->add_option("inputs", an_cmd.inputs, "Bit file(s); '-' reads stdin")->required();
    an->add_option("--input-format", an_cmd.input_format, "auto | packed | ascii | csv | raw")->capture_default_str();
    an->add_option("--format", an_cmd.format, "json | csv");
    an->add_option("--bits", an_cmd.bits, "Use only the first N bits of each input");
    an->add_option("-o,--out", an_cmd.out, "Output path (default stdout)");

    TestCmd test_cmd;
    auto* test = app.add_subcommand("test", "Run a statistical test battery");
    test->add_option("battery", test_cmd.battery, "fips | menezes")
        ->required()
        ->check(CLI::IsMember({"fips", "menezes"}));
    test->add_option("input", test_cmd.input, "Bit file; '-' reads stdin")->required();
    test->add_option("--input-format", test_cmd.input_format, "auto | packed | ascii | csv | raw")
        ->capture_default_str();
    test->add_option("--format", test_cmd.format, "json | csv")->capture_default_str();
    test->add_option("-o,--out", test_cmd.out, "Output path (default stdout)");

    ExperimentCmd ex_cmd;
    auto* ex = app.add_subcommand("experiment", "Reproduce a figure or aggregate experiment");
    ex->add_option("name", ex_cmd.name, "attractor | lc-even | lc-odd | lc-profile | corr | autocorr | fips-rate")
        ->required()
        ->check(CLI::IsMember({"attractor", "lc-even", "lc-odd", "lc-profile", "corr", "autocorr", "fips-rate"}));
    add_generator_flags(ex, ex_cmd.gen);
    ex->add_option("--bits", ex_cmd.bits, "Bits per sequence");
    ex->add_option("--trials", ex_cmd.trials, "Number of sequences")->check(CLI::PositiveNumber);
    ex->add_option("--pairs", ex_cmd.pairs, "Number of sequence pairs")->check(CLI::PositiveNumber);
    ex->add_option("--points", ex_cmd.points, "Orbit points for the attractor")->capture_default_str();
    ex->add_option("--sampling", ex_cmd.sampling, "windows | perturbed");
    ex->add_option("--out-dir", ex_cmd.out_dir, "Directory for figure CSV files")->capture_default_str();
    ex->add_option("-j,--jobs", ex_cmd.jobs, "Worker threads (default $HENONSEQ_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    KeyspaceCmd ks_cmd;
    auto* ks = app.add_subcommand("keyspace", "Estimate log2 of the keyspace size");
    ks->add_option("--epsilon", ks_cmd.spec.epsilon, "Smallest representable increment")->capture_default_str();
    ks->add_option("--alpha-min", ks_cmd.alpha_min)->capture_default_str();
    ks->add_option("--alpha-max", ks_cmd.alpha_max)->capture_default_str();
    ks->add_option("--beta-min", ks_cmd.beta_min)->capture_default_str();
    ks->add_option("--beta-max", ks_cmd.beta_max)->capture_default_str();
    ks->add_option("--x0-min", ks_cmd.x0_min)->capture_default_str();
    ks->add_option("--x0-max", ks_cmd.x0_max)->capture_default_str();
    ks->add_option("--y0-min", ks_cmd.y0_min)->capture_default_str();
    ks->add_option("--y0-max", ks_cmd.y0_max)->capture_default_str();
    ks->add_option("--p-min", ks_cmd.p_min)->capture_default_str();
    ks->add_option("--p-max", ks_cmd.p_max)->capture_default_str();
    ks->add_option("--format", ks_cmd.format, "text | json")->capture_default_str();

    CipherCmd ci_cmd;
    auto* ci = app.add_subcommand("cipher", "Vernam encryption with a Hénon keystream (no authentication)");
    ci->add_option("mode", ci_cmd.mode, "encrypt | decrypt")
        ->required()
        ->check(CLI::IsMember({"encrypt", "decrypt"}));
    add_generator_flags(ci, ci_cmd.gen);
    ci->add_option("-i,--in", ci_cmd.in, "Input path ('-' = stdin)")->capture_default_str();
    ci->add_option("-o,--out", ci_cmd.out, "Output path ('-' = stdout)")->capture_default_str();

    auto* presets = app.add_subcommand("presets", "List built-in parameter presets");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());

    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (gen->parsed()) return run_generate(gen_cmd);
        if (an->parsed()) return run_analyze(an_cmd);
        if (test->parsed()) return run_test(test_cmd);
        if (ex->parsed()) return run_experiment(ex_cmd);
        if (ks->parsed()) return run_keyspace(ks_cmd);
        if (ci->parsed()) return run_cipher(ci_cmd);
        if (presets->parsed()) {
            json j = json::object();
            for (const auto& name : preset_names()) {
                j[name] = config_json(*preset(name));
            }
            std::cout << j.dump(2) << '\n';
            return kSuccess;
        }
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << " (bound exceeded; check --alpha, --beta, --x0, --y0)\n";
        return kRuntime;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BitFileError& e) {
        std::cerr << "error: malformed bit file: " << e.what() << '\n';
        return kUsage;
    } catch (const WrongLength& e) {
        std::cerr << "error: WrongLength: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kUsage;
}

}  // namespace henonseq::cli
