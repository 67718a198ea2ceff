#ifndef EDGEX_YULE_HPP
#define EDGEX_YULE_HPP

#include <cstdint>
#include <map>

namespace edgex {

// Yule distribution with tail exponent gamma > 1:
//   pr(K = k) = (gamma - 1) B(k, gamma) = (gamma - 1) Gamma(k) Gamma(gamma) / Gamma(k + gamma),
// so pr(K = k) ~ (gamma-1) Gamma(gamma) k^{-gamma}. The baseline estimator
// for power-law degree exponents, cross-checked against 1 + alpha.
double yule_log_pmf(std::uint32_t k, double gamma);

struct YuleFit {
    double gamma;     // > 1
    double log_lik;
    bool boundary;    // no interior maximum (e.g. all degrees equal to 1)
};

// Maximizes sum_k N_k log pr(K = k; gamma) over gamma > 1 by golden
// section on the unimodal log-likelihood, tolerance 1e-8. degree_counts
// maps degree k >= 1 to the number of vertices N_k.
YuleFit fit_yule(const std::map<std::uint32_t, std::uint64_t>& degree_counts);

}  // namespace edgex

#endif
