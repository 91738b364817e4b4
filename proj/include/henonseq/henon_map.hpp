#pragma once

#include <cstdint>
#include <vector>

namespace henonseq {

/// Hénon coefficients plus the starting point of the orbit.
struct MapParameters {
    double alpha = 1.4;
    double beta = 0.3;
    double x0 = 0.0;
    double y0 = 0.0;

    /// Throws std::invalid_argument unless all four fields are finite.
    void validate() const;
};

struct State {
    double x = 0.0;
    double y = 0.0;
    std::uint64_t k = 0;
};

inline constexpr double kDefaultDivergenceBound = 1e6;

/// One step of x' = -alpha*x^2 + y + 1, y' = beta*x.
///
/// The evaluation order (((-alpha)*x)*x + y) + 1 is fixed and the library is
/// built with FP contraction disabled, so every platform with IEEE-754
/// binary64 round-to-nearest produces the same bits.
State iterate(const State& s, const MapParameters& p) noexcept;

/// Streaming orbit X1, X2, ... starting from (x0, y0).
///
/// next() throws DivergenceError(k) as soon as |x| or |y| of iterate k exceeds
/// the bound or turns non-finite; the orbit is unusable afterwards.
class Orbit {
public:
    explicit Orbit(const MapParameters& params, double bound = kDefaultDivergenceBound);
    /// Resume from an arbitrary state (e.g. the point reached after calibration).
    Orbit(const MapParameters& params, const State& start, double bound = kDefaultDivergenceBound);

    const State& next();
    const State& current() const noexcept { return state_; }
    const MapParameters& params() const noexcept { return params_; }

private:
    MapParameters params_;
    State state_;
    double bound_;
};

/// The first n iterates, materialized. Prefer Orbit for long runs.
std::vector<State> orbit(const MapParameters& params, std::uint64_t n,
                         double bound = kDefaultDivergenceBound);

}  // namespace henonseq
