#ifndef EDGEX_LIKELIHOOD_HPP
#define EDGEX_LIKELIHOOD_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "edgex/arity.hpp"
#include "edgex/hollywood.hpp"
#include "edgex/network.hpp"
#include "edgex/stats.hpp"

namespace edgex {

// Exact log pmf of the Hollywood model at an observed network,
//
//   log pr(Y_n = E) = sum_k M_k log nu_k
//                     + sum_{j=1}^{v-1} log(theta + j*alpha)
//                     - sum_{j=1}^{m-1} log(theta + j)
//                     + sum_{k>=2} N_k [lgamma(k - alpha) - lgamma(1 - alpha)],
//
// the middle two sums being the cancelled form of
// alpha^v (theta/alpha)^{rise v} / theta^{rise m}: dropping the shared j=0
// factor theta leaves factors that are positive in both regimes, so no
// sign bookkeeping is needed. Returns -inf (with a message in *diag when
// given) if some observed arity lies outside nu's support, or if the
// finite regime cannot hold the network's vertices. Throws on an empty
// network.
double hollywood_log_pmf(const EdgeLabeledNetwork& net, const HollywoodParams& params,
                         std::string* diag = nullptr);
double hollywood_log_pmf(const NetworkStats& s, const HollywoodParams& params, std::string* diag = nullptr);

// The same surface evaluated at free (alpha, theta), without regime
// bookkeeping; used by the score checks and the optimizer. Valid wherever
// every factor theta + j*alpha (j = 1..v-1) is positive, alpha < 1 and
// theta > -1; -inf outside.
double hollywood_log_pmf_at(const NetworkStats& s, double alpha, double theta, const AritySpec& nu);

// Exact partial derivatives of the log pmf at free interior (alpha,
// theta). Throws std::domain_error at regime boundaries (alpha in {0,1},
// theta = -alpha) and wherever the pmf is not finite.
double score_alpha(const NetworkStats& s, double alpha, double theta);
double score_theta(const NetworkStats& s, double alpha, double theta);

// Analytic second derivatives, for observed-information standard errors.
struct LogLikHessian {
    double aa;
    double at;
    double tt;
};
LogLikHessian loglik_hessian(const NetworkStats& s, double alpha, double theta);

// nu-hat_k = M_k / e, the closed-form maximizer. Requires e >= 1.
AritySpec fit_nu(const NetworkStats& s);

struct FitResult {
    double alpha;
    double theta;
    double se_alpha;
    double se_theta;
    double log_lik;
    AritySpec nu;
    Regime regime;
    std::uint32_t iterations;
    bool converged;
    bool boundary_hit;
    // set for undirected inputs: the reported log_lik omits the constant
    // orientation count log C(E*), which does not depend on the parameters
    bool loglik_up_to_constant = false;

    HollywoodParams params() const;
};

struct RegimeRequest {
    enum class Kind { Infinite, Finite, Auto };
    Kind kind = Kind::Auto;
    std::optional<std::uint32_t> k;  // finite population size; defaults to v(net)

    static RegimeRequest infinite() { return {Kind::Infinite, std::nullopt}; }
    static RegimeRequest finite(std::optional<std::uint32_t> k = std::nullopt) { return {Kind::Finite, k}; }
    static RegimeRequest automatic(std::optional<std::uint32_t> k = std::nullopt) { return {Kind::Auto, k}; }
};

struct MleFit {
    FitResult chosen;
    std::optional<FitResult> alternative;  // the other regime, under Auto
};

// Maximum likelihood for (alpha, theta) with nu profiled out first.
// Alternates 1-d root finds on the two score equations (bracketed
// bisection with secant acceleration) until |d alpha| < 1e-8 and
// |d theta| / (1 + |theta|) < 1e-8, at most 500 sweeps. Standard errors
// come from the inverse observed information; in the finite regime the
// model is one-dimensional along theta = -k*alpha and se(theta) =
// k * se(alpha). Under Auto both regimes are fitted (finite with k =
// v(net) unless a k is requested) and the higher log-likelihood wins.
// Requires e >= 2; Finite requires k >= v(net).
FitResult fit_mle_infinite(const NetworkStats& s, const AritySpec& nu, bool undirected = false);
FitResult fit_mle_finite(const NetworkStats& s, std::uint32_t k, const AritySpec& nu, bool undirected = false);
MleFit fit_mle(const EdgeLabeledNetwork& net, const RegimeRequest& request);

}  // namespace edgex

#endif
