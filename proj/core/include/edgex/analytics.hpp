#ifndef EDGEX_ANALYTICS_HPP
#define EDGEX_ANALYTICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edgex/growth_trace.hpp"
#include "edgex/hollywood.hpp"
#include "edgex/likelihood.hpp"
#include "edgex/stats.hpp"

namespace edgex {

// Limiting degree law of the infinite-regime Hollywood process,
//   p_alpha(k) = alpha (1-alpha)^{rise (k-1)} / k!  ~  alpha k^{-(1+alpha)} / Gamma(1-alpha).
// Requires 0 < alpha < 1, k >= 1.
double theoretical_degree_pmf(double alpha, std::uint32_t k);

// Tail mass p_alpha(> K) = Gamma(K+1-alpha) / (Gamma(K+1) Gamma(1-alpha)); K = 0 gives 1.
double theoretical_degree_tail(double alpha, std::uint32_t K);

// E(v(Y_n)) ~ Gamma(theta+1) / (alpha Gamma(theta+alpha)) * (mu n)^alpha.
// Infinite-regime parameters only.
double expected_vertices_asymptote(double alpha, double theta, double mu, std::uint64_t n);

// v / e^alpha at the last checkpoint, plus the trailing checkpoint values
// for convergence inspection.
struct AlphaDiversityEstimate {
    double value;
    std::vector<std::pair<std::uint64_t, double>> trail;  // (n, v/e^alpha)
};
AlphaDiversityEstimate alpha_diversity_estimate(const GrowthTrace& trace, double alpha);

// (n, e/v^{mean arity}) per checkpoint.
std::vector<std::pair<std::uint64_t, double>> sparsity_curve(const GrowthTrace& trace);

// Probability that the next interaction contains at least one unseen
// vertex:
//   1 - sum_k nu_k (m - alpha v)^{rise k} / (theta + m)^{rise k},
// built from the urn conditionals, so it matches forward simulation
// exactly. (In the source display the two totals are glossed with swapped
// names; the quantities entering are the vertex count v and total degree
// m.) Returns 1 on the empty network.
double predict_new_vertex_probability(const NetworkStats& s, const HollywoodParams& params);

struct SparsityTestResult {
    std::string null_hypothesis;   // H0: alpha <= 1/mu (not sparse) vs H1: alpha > 1/mu
    double threshold;              // 1/mu
    double alpha_hat;
    double se_alpha;
    double wald;                   // (alpha_hat - 1/mu) / se
    double p_value;                // one-sided, upper tail
    bool reject_at_05;
    std::string caveat;
};

// One-sided Wald test of H0: alpha <= 1/mu against H1: alpha > 1/mu (the
// sparse range). Only meaningful for infinite-population fits; a
// finite-regime fit is refused, and the caveat notes that the test is
// degenerate on projected data (projection makes every 0 < alpha < 1
// sparse). mu is the mean edge arity.
SparsityTestResult sparsity_test(const FitResult& fit, double mu);

// Least-squares slope of (log k, log d_k) over degrees with N_k >= 5 and
// k at most the 95th degree percentile; display-grade power-law slope.
// Returns nan when fewer than two usable points exist.
double loglog_degree_slope(const NetworkStats& s);

// Growth trace of an observed network along its edge order.
GrowthTrace observed_growth_trace(const EdgeLabeledNetwork& net);

}  // namespace edgex

#endif
