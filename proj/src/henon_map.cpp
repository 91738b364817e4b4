#include "henonseq/henon_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "henonseq/errors.hpp"

namespace henonseq {

void MapParameters::validate() const {
    const auto check = [](double v, const char* name) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string("map parameter ") + name + " is not finite");
        }
    };
    check(alpha, "alpha");
    check(beta, "beta");
    check(x0, "x0");
    check(y0, "y0");
}

State iterate(const State& s, const MapParameters& p) noexcept {
    const double t = (-p.alpha) * s.x;
    const double quad = t * s.x;
    const double partial = quad + s.y;
    return State{partial + 1.0, p.beta * s.x, s.k + 1};
}

Orbit::Orbit(const MapParameters& params, double bound)
    : Orbit(params, State{params.x0, params.y0, 0}, bound) {}

Orbit::Orbit(const MapParameters& params, const State& start, double bound)
    : params_(params), state_(start), bound_(bound) {
    params_.validate();
    if (!(bound > 0.0)) {
        throw std::invalid_argument("divergence bound must be positive");
    }
    if (!std::isfinite(start.x) || !std::isfinite(start.y)) {
        throw std::invalid_argument("orbit start state is not finite");
    }
}

const State& Orbit::next() {
    state_ = iterate(state_, params_);
    // Infinities and NaN always count as divergence.
    if (!std::isfinite(state_.x) || !std::isfinite(state_.y) || !(std::fabs(state_.x) <= bound_) ||
        !(std::fabs(state_.y) <= bound_)) {
        throw DivergenceError(state_.k);
    }
    return state_;
}

std::vector<State> orbit(const MapParameters& params, std::uint64_t n, double bound) {
    Orbit o(params, bound);
    std::vector<State> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        out.push_back(o.next());
    }
    return out;
}

}  // namespace henonseq
