#include "edgex/yule.hpp"

#include <cmath>
#include <stdexcept>

namespace edgex {

double yule_log_pmf(std::uint32_t k, double gamma) {
    if (k < 1) throw std::invalid_argument("degree must be >= 1");
    if (!(gamma > 1.0)) throw std::domain_error("yule requires gamma > 1");
    const double kd = static_cast<double>(k);
    return std::log(gamma - 1.0) + std::lgamma(gamma) + std::lgamma(kd) - std::lgamma(kd + gamma);
}

namespace {

double yule_loglik(const std::map<std::uint32_t, std::uint64_t>& counts, double gamma) {
    double acc = 0.0;
    for (const auto& [k, nk] : counts) acc += static_cast<double>(nk) * yule_log_pmf(k, gamma);
    return acc;
}

}  // namespace

YuleFit fit_yule(const std::map<std::uint32_t, std::uint64_t>& degree_counts) {
    if (degree_counts.empty()) throw std::invalid_argument("fit_yule requires at least one vertex");
    for (const auto& [k, nk] : degree_counts) {
        if (k < 1) throw std::invalid_argument("degrees must be >= 1");
        (void)nk;
    }

    const double lo_edge = 1.0 + 1e-9;
    // expand until the log-likelihood starts decreasing; if it never does
    // there is no interior maximum and we report the boundary
    double prev = lo_edge;
    double cur = 2.0;
    double ll_prev = yule_loglik(degree_counts, prev);
    double ll_cur = yule_loglik(degree_counts, cur);
    double hi = cur;
    bool bracketed = false;
    while (hi < 1e9) {
        hi = cur * 2.0;
        const double ll_hi = yule_loglik(degree_counts, hi);
        if (ll_hi < ll_cur && ll_cur >= ll_prev) {
            bracketed = true;
            break;
        }
        prev = cur;
        ll_prev = ll_cur;
        cur = hi;
        ll_cur = ll_hi;
    }
    if (!bracketed) {
        if (ll_cur < ll_prev) {
            // decreasing from the left edge: maximum at gamma -> 1+
            return {lo_edge, yule_loglik(degree_counts, lo_edge), true};
        }
        return {hi, yule_loglik(degree_counts, hi), true};
    }

    // golden section on [prev, hi] around the peak at cur
    const double gr = 0.61803398874989484820;
    double a = prev, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = yule_loglik(degree_counts, x1);
    double f2 = yule_loglik(degree_counts, x2);
    while (b - a > 1e-8) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = yule_loglik(degree_counts, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = yule_loglik(degree_counts, x1);
        }
    }
    const double gamma = 0.5 * (a + b);
    return {gamma, yule_loglik(degree_counts, gamma), false};
}

}  // namespace edgex
