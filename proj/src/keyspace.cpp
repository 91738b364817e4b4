#include "henonseq/keyspace.hpp"

#include <cmath>
#include <stdexcept>

namespace henonseq {

void KeyspaceSpec::validate() const {
    for (double w : {alpha_width, beta_width, x0_width, y0_width}) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("keyspace interval widths must be positive and finite");
        }
    }
    if (p_count < 1) {
        throw std::invalid_argument("keyspace p_count must be at least 1");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("keyspace epsilon must be positive and finite");
    }
}

double keyspace_bits(const KeyspaceSpec& spec) {
    spec.validate();
    const double log_eps = std::log2(spec.epsilon);
    double bits = 0.0;
    for (double w : {spec.alpha_width, spec.beta_width, spec.x0_width, spec.y0_width}) {
        bits += std::log2(w) - log_eps;
    }
    return bits + std::log2(static_cast<double>(spec.p_count));
}

}  // namespace henonseq
