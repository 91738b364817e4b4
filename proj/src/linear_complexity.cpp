#include "henonseq/linear_complexity.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "henonseq/errors.hpp"

namespace henonseq {

namespace {

using Words = std::vector<std::uint64_t>;

// 64 bits of `src` starting at bit offset `pos`; bits past the end read as 0.
std::uint64_t word_at(const Words& src, std::size_t pos) {
    const std::size_t idx = pos >> 6;
    const std::size_t sh = pos & 63;
    std::uint64_t w = idx < src.size() ? src[idx] >> sh : 0;
    if (sh != 0 && idx + 1 < src.size()) {
        w |= src[idx + 1] << (64 - sh);
    }
    return w;
}

// dst ^= src << shift, touching only src bits 0..src_bits-1.
void xor_shifted(Words& dst, const Words& src, std::size_t shift, std::size_t src_bits) {
    const std::size_t word_shift = shift >> 6;
    const std::size_t bit_shift = shift & 63;
    const std::size_t n = (src_bits + 63) / 64;
    for (std::size_t w = 0; w < n && w < src.size(); ++w) {
        const std::size_t t = w + word_shift;
        if (t < dst.size()) {
            dst[t] ^= src[w] << bit_shift;
        }
        if (bit_shift != 0 && t + 1 < dst.size()) {
            dst[t + 1] ^= src[w] >> (64 - bit_shift);
        }
    }
}

struct BmaState {
    Words connection;
    std::size_t length = 0;
};

// Runs BMA, reporting the complexity after each processed bit to `on_step`.
template <typename OnStep>
BmaState run_bma(const BitSequence& s, OnStep on_step) {
    const std::size_t n_bits = s.size();
    const std::size_t poly_words = (n_bits + 1 + 63) / 64 + 1;

    // reversed[N-1-j] = s_j, so s_{n-i} for i = 0..L is a forward window.
    Words reversed((n_bits + 63) / 64 + 1, 0);
    for (std::size_t j = 0; j < n_bits; ++j) {
        if (s[j]) {
            const std::size_t r = n_bits - 1 - j;
            reversed[r >> 6] |= std::uint64_t{1} << (r & 63);
        }
    }

    Words c(poly_words, 0);
    Words b(poly_words, 0);
    c[0] = 1;
    b[0] = 1;
    std::size_t l = 0;
    std::size_t l_b = 0;  // degree bound of b
    std::size_t m = 1;

    for (std::size_t n = 0; n < n_bits; ++n) {
        const std::size_t off = n_bits - 1 - n;
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w <= l / 64; ++w) {
            acc ^= c[w] & word_at(reversed, off + 64 * w);
        }
        // deg c <= l, so higher words of c are zero.
        const bool discrepancy = (std::popcount(acc) & 1) != 0;

        if (!discrepancy) {
            ++m;
        } else if (2 * l <= n) {
            Words prev = c;
            const std::size_t prev_l = l;
            xor_shifted(c, b, m, l_b + 1);
            l = n + 1 - l;
            b = std::move(prev);
            l_b = prev_l;
            m = 1;
        } else {
            xor_shifted(c, b, m, l_b + 1);
            ++m;
        }
        on_step(n, l);
    }
    return BmaState{std::move(c), l};
}

}  // namespace

BerlekampMasseyResult berlekamp_massey(const BitSequence& w) {
    BmaState st = run_bma(w, [](std::size_t, std::size_t) {});
    BerlekampMasseyResult out;
    out.linear_complexity = st.length;
    out.connection.resize(st.length + 1);
    for (std::size_t i = 0; i <= st.length; ++i) {
        out.connection[i] = static_cast<Bit>((st.connection[i >> 6] >> (i & 63)) & 1u);
    }
    return out;
}

std::size_t linear_complexity(const BitSequence& w) {
    return run_bma(w, [](std::size_t, std::size_t) {}).length;
}

std::vector<std::size_t> lc_profile(const BitSequence& w) {
    std::vector<std::size_t> profile;
    profile.reserve(w.size());
    run_bma(w, [&profile](std::size_t, std::size_t l) { profile.push_back(l); });
    return profile;
}

double LcDistribution::total_mass() const {
    double sum = 0.0;
    for (double p : pmf) {
        sum += p;
    }
    return sum;
}

LcDistribution conjectured_pmf(std::size_t length) {
    if (length < 2) {
        throw std::invalid_argument("conjectured_pmf requires N >= 2");
    }
    const auto n = static_cast<long long>(length);
    LcDistribution out;
    out.length = length;
    out.pmf.assign(length + 1, 0.0);
    for (long long c = 1; c < n; ++c) {
        // Even N: lower branch c <= N/2. Odd N: c < (N+1)/2, i.e. 2c < N+1.
        const bool lower = (n % 2 == 0) ? (2 * c <= n) : (2 * c < n + 1);
        const long long exponent = lower ? (n - 2 * c + 1) : (2 * c - n);
        out.pmf[static_cast<std::size_t>(c)] = std::ldexp(1.0, static_cast<int>(-exponent));
    }
    return out;
}

Moments lc_moments(std::span<const std::size_t> samples) {
    if (samples.size() < 2) {
        throw InsufficientSamples("need at least 2 samples, got " + std::to_string(samples.size()));
    }
    const auto n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (auto v : samples) {
        sum += static_cast<double>(v);
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (auto v : samples) {
        const double d = static_cast<double>(v) - mean;
        ss += d * d;
    }
    return Moments{mean, ss / (n - 1.0)};
}

}  // namespace henonseq
