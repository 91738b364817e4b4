#include "henonseq/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "henonseq/errors.hpp"
#include "henonseq/stat_tests.hpp"

namespace henonseq {

std::uint64_t Histogram::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) {
        t += c;
    }
    return t;
}

std::vector<double> Histogram::frequencies() const {
    std::vector<double> f(counts.size(), 0.0);
    const auto t = total();
    if (t == 0) {
        return f;
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        f[i] = static_cast<double>(counts[i]) / static_cast<double>(t);
    }
    return f;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    const std::size_t n = std::max(p.size(), q.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = i < p.size() ? p[i] : 0.0;
        const double b = i < q.size() ? q[i] : 0.0;
        sum += std::fabs(a - b);
    }
    return sum / 2.0;
}

std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double perturbed_x0(double x0, std::uint64_t trial) noexcept {
    const double u = static_cast<double>(mix64(trial) >> 11) * 0x1.0p-53;
    return x0 + kPerturbationSpread * (2.0 * u - 1.0);
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

WindowSample sample_windows(const GeneratorConfig& cfg, std::size_t bits, std::size_t count,
                            Sampling sampling, unsigned jobs) {
    WindowSample out;
    out.windows.resize(count);
    if (sampling == Sampling::DisjointWindows) {
        Generator gen(cfg);
        for (auto& w : out.windows) {
            w = gen.take(bits);
        }
        out.iterations = gen.iterations();
    } else {
        std::vector<std::uint64_t> iterations(count, 0);
        parallel_for(count, jobs, [&](std::size_t i) {
            GeneratorConfig trial = cfg;
            trial.params.x0 = perturbed_x0(cfg.params.x0, i);
            Generator gen(trial);
            out.windows[i] = gen.take(bits);
            iterations[i] = gen.iterations();
        });
        for (auto it : iterations) {
            out.iterations += it;
        }
    }
    out.bits_generated = static_cast<std::uint64_t>(bits) * count;
    return out;
}

LcExperiment lc_histogram(std::span<const BitSequence> windows, std::size_t length, unsigned jobs) {
    if (windows.size() < 2) {
        throw InsufficientSamples("lc experiment needs at least 2 windows");
    }
    LcExperiment out;
    out.length = length;
    out.complexities.resize(windows.size());
    parallel_for(windows.size(), jobs,
                 [&](std::size_t i) { out.complexities[i] = linear_complexity(windows[i]); });

    out.histogram.labels.resize(length + 1);
    out.histogram.counts.assign(length + 1, 0);
    for (std::size_t c = 0; c <= length; ++c) {
        out.histogram.labels[c] = static_cast<double>(c);
    }
    for (auto c : out.complexities) {
        ++out.histogram.counts.at(c);
    }
    out.moments = lc_moments(out.complexities);
    if (length >= 2) {
        out.conjectured = conjectured_pmf(length);
        out.tv_distance = total_variation(out.histogram.frequencies(), out.conjectured.pmf);
    }
    return out;
}

LcExperiment lc_experiment(const GeneratorConfig& cfg, std::size_t length, std::size_t trials,
                           const ExperimentOptions& opts) {
    if (trials < 2) {
        throw InsufficientSamples("lc experiment needs trials >= 2");
    }
    const WindowSample sample = sample_windows(cfg, length, trials, opts.sampling, opts.jobs);
    LcExperiment out = lc_histogram(sample.windows, length, opts.jobs);
    out.bits_generated = sample.bits_generated;
    return out;
}

CorrExperiment corr_histogram(std::span<const BitSequence> windows, std::size_t length) {
    if (windows.empty() || windows.size() % 2 != 0) {
        throw std::invalid_argument("correlation experiment needs a positive, even number of windows");
    }
    CorrExperiment out;
    out.length = length;
    out.reference = correlation_pmf_normal(length);
    out.histogram.labels = out.reference.support;
    out.histogram.counts.assign(out.reference.support.size(), 0);
    for (std::size_t i = 0; i < windows.size(); i += 2) {
        const double theta = correlation(windows[i], windows[i + 1]);
        const auto idx = out.reference.index_of(theta);
        if (idx < 0) {
            throw std::logic_error("correlation value outside the attainable support");
        }
        ++out.histogram.counts[static_cast<std::size_t>(idx)];
    }
    out.tv_distance = total_variation(out.histogram.frequencies(), out.reference.probs);
    return out;
}

CorrExperiment corr_experiment(const GeneratorConfig& cfg, std::size_t length, std::size_t pairs,
                               const ExperimentOptions& opts) {
    if (pairs < 1) {
        throw std::invalid_argument("correlation experiment needs pairs >= 1");
    }
    const WindowSample sample = sample_windows(cfg, length, 2 * pairs, opts.sampling, opts.jobs);
    CorrExperiment out = corr_histogram(sample.windows, length);
    out.bits_generated = sample.bits_generated;
    return out;
}

std::vector<std::pair<std::int64_t, double>> autocorr_trace(const BitSequence& w, unsigned jobs) {
    if (w.size() < 2) {
        throw std::invalid_argument("autocorrelation trace needs at least 2 bits");
    }
    const auto n = static_cast<std::int64_t>(w.size());
    std::vector<std::pair<std::int64_t, double>> trace(static_cast<std::size_t>(2 * n - 1));
    parallel_for(trace.size(), jobs, [&](std::size_t i) {
        const std::int64_t j = static_cast<std::int64_t>(i) - (n - 1);
        trace[i] = {j, autocorrelation(w, j)};
    });
    return trace;
}

std::vector<std::pair<std::int64_t, double>> autocorr_trace(const GeneratorConfig& cfg, std::size_t length,
                                                            unsigned jobs) {
    return autocorr_trace(generate(cfg, length), jobs);
}

FipsRate fips_pass_rate(const GeneratorConfig& cfg, std::size_t trials, const ExperimentOptions& opts) {
    const WindowSample sample = sample_windows(cfg, kFipsLength, trials, opts.sampling, opts.jobs);
    std::vector<char> passed(trials, 0);
    parallel_for(trials, opts.jobs, [&](std::size_t i) {
        passed[i] = fips140_1(sample.windows[i]).overall.value_or(false) ? 1 : 0;
    });
    FipsRate out;
    out.trials = trials;
    out.passes = static_cast<std::size_t>(std::count(passed.begin(), passed.end(), 1));
    return out;
}

}  // namespace henonseq
