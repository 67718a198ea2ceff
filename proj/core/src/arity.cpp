#include "edgex/arity.hpp"

#include <cmath>
#include <stdexcept>

namespace edgex {

AritySpec::AritySpec(std::map<std::uint32_t, double> probabilities) : probs_(std::move(probabilities)) {
    if (probs_.empty()) throw std::invalid_argument("arity distribution must have support");
    double total = 0.0;
    for (const auto& [k, p] : probs_) {
        if (k == 0) throw std::invalid_argument("arity must be >= 1");
        if (!(p > 0.0)) throw std::invalid_argument("arity probabilities must be positive");
        total += p;
        mean_ += static_cast<double>(k) * p;
    }
    if (std::fabs(total - 1.0) > 1e-12) throw std::invalid_argument("arity probabilities must sum to 1");
}

double AritySpec::prob(std::uint32_t k) const {
    auto it = probs_.find(k);
    return it == probs_.end() ? 0.0 : it->second;
}

std::uint32_t AritySpec::sample(Rng& rng) const {
    double u = rng.uniform();
    for (const auto& [k, p] : probs_) {
        if (u < p) return k;
        u -= p;
    }
    return probs_.rbegin()->first;  // guard against rounding at u ~ 1
}

}  // namespace edgex
