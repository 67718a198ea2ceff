#ifndef EDGEX_ARITY_HPP
#define EDGEX_ARITY_HPP

#include <cstdint>
#include <map>

#include "edgex/rng.hpp"

namespace edgex {

// Finite-support distribution of edge arities (the nu of the generative
// models). Stored keys carry strictly positive mass; the masses sum to 1
// within 1e-12.
class AritySpec {
public:
    explicit AritySpec(std::map<std::uint32_t, double> probabilities);

    static AritySpec single(std::uint32_t k) { return AritySpec({{k, 1.0}}); }

    const std::map<std::uint32_t, double>& probabilities() const { return probs_; }
    double mean() const { return mean_; }
    std::uint32_t max_arity() const { return probs_.rbegin()->first; }

    bool supports(std::uint32_t k) const { return probs_.count(k) != 0; }
    double prob(std::uint32_t k) const;

    std::uint32_t sample(Rng& rng) const;  // inverse CDF over keys in increasing order

private:
    std::map<std::uint32_t, double> probs_;
    double mean_ = 0.0;
};

}  // namespace edgex

#endif
