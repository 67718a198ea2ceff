#include "edgex/likelihood.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace edgex {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

using boost::math::digamma;
using boost::math::trigamma;

// true when every factor theta + j*alpha, j = 1..v-1, is positive and the
// lgamma arguments below are in range
bool shape_in_domain(const NetworkStats& s, double alpha, double theta) {
    if (alpha == 0.0 || alpha >= 1.0) return false;
    if (theta <= -1.0) return false;
    if (s.v >= 2) {
        if (alpha > 0.0) {
            if (theta / alpha + 1.0 <= 0.0) return false;  // theta <= -alpha
        } else {
            const double t = -theta / alpha;
            if (theta <= 0.0 || t <= static_cast<double>(s.v) - 1.0) return false;
        }
    } else if (theta <= 0.0 && alpha > 0.0 && theta <= -alpha) {
        return false;
    }
    return true;
}

// sum_{j=1}^{v-1} log(theta + j*alpha)
double log_new_vertex_product(const NetworkStats& s, double alpha, double theta) {
    if (s.v < 2) return 0.0;
    const double v = static_cast<double>(s.v);
    if (alpha > 0.0) {
        const double r = theta / alpha;
        return (v - 1.0) * std::log(alpha) + std::lgamma(r + v) - std::lgamma(r + 1.0);
    }
    const double t = -theta / alpha;
    return (v - 1.0) * std::log(-alpha) + std::lgamma(t) - std::lgamma(t - v + 1.0);
}

// sum over degrees of N_k [lgamma(k - alpha) - lgamma(1 - alpha)]
double log_repeat_product(const NetworkStats& s, double alpha) {
    double acc = 0.0;
    const double l1 = std::lgamma(1.0 - alpha);
    for (const auto& [k, nk] : s.N) {
        if (k < 2) continue;
        acc += static_cast<double>(nk) * (std::lgamma(static_cast<double>(k) - alpha) - l1);
    }
    return acc;
}

// sum_{j=1}^{v-1} 1/(theta + j*alpha)
double sum_inv_new(const NetworkStats& s, double alpha, double theta) {
    if (s.v < 2) return 0.0;
    const double v = static_cast<double>(s.v);
    if (alpha > 0.0) {
        const double r = theta / alpha;
        return (digamma(r + v) - digamma(r + 1.0)) / alpha;
    }
    double acc = 0.0;
    for (std::uint64_t j = 1; j < s.v; ++j) acc += 1.0 / (theta + static_cast<double>(j) * alpha);
    return acc;
}

// sum_{j=1}^{v-1} j/(theta + j*alpha)
double sum_j_inv_new(const NetworkStats& s, double alpha, double theta) {
    if (s.v < 2) return 0.0;
    const double v = static_cast<double>(s.v);
    if (alpha > 0.0) {
        return ((v - 1.0) - theta * sum_inv_new(s, alpha, theta)) / alpha;
    }
    double acc = 0.0;
    for (std::uint64_t j = 1; j < s.v; ++j) {
        const double jd = static_cast<double>(j);
        acc += jd / (theta + jd * alpha);
    }
    return acc;
}

void require_interior(const NetworkStats& s, double alpha, double theta) {
    if (alpha == 0.0 || alpha == 1.0 || theta == -alpha)
        throw std::domain_error("score undefined at the regime boundary");
    if (!shape_in_domain(s, alpha, theta)) throw std::domain_error("(alpha, theta) outside the likelihood domain");
}

// Bracketed root find: secant proposal, bisection fallback (forced on
// alternate iterations so the bracket provably shrinks). flo and fhi must
// have opposite signs.
double solve_root(const std::function<double(double)>& f, double lo, double hi, double flo, double fhi) {
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    for (int it = 0; it < 240; ++it) {
        if (hi - lo <= 1e-13 * (1.0 + std::fabs(lo) + std::fabs(hi))) break;
        double mid = 0.5 * (lo + hi);
        if (it % 2 == 0) {
            const double denom = fhi - flo;
            if (denom != 0.0) {
                const double secant = hi - fhi * (hi - lo) / denom;
                const double margin = 1e-3 * (hi - lo);
                if (secant > lo + margin && secant < hi - margin) mid = secant;
            }
        }
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

double hollywood_log_pmf_at(const NetworkStats& s, double alpha, double theta, const AritySpec& nu) {
    if (s.e == 0) throw std::invalid_argument("log pmf requires a nonempty network");
    double acc = 0.0;
    for (const auto& [k, mk] : s.M) {
        if (!nu.supports(k)) return kNegInf;
        acc += static_cast<double>(mk) * std::log(nu.prob(k));
    }
    if (!shape_in_domain(s, alpha, theta)) return kNegInf;
    acc += log_new_vertex_product(s, alpha, theta);
    acc -= std::lgamma(theta + static_cast<double>(s.m)) - std::lgamma(theta + 1.0);
    acc += log_repeat_product(s, alpha);
    return acc;
}

double hollywood_log_pmf(const NetworkStats& s, const HollywoodParams& params, std::string* diag) {
    if (s.e == 0) throw std::invalid_argument("log pmf requires a nonempty network");
    std::vector<std::uint32_t> missing;
    for (const auto& [k, mk] : s.M) {
        if (!params.nu.supports(k)) missing.push_back(k);
    }
    if (!missing.empty()) {
        if (diag != nullptr) {
            std::ostringstream os;
            os << "arities outside nu support:";
            for (std::uint32_t k : missing) os << ' ' << k;
            *diag = os.str();
        }
        return kNegInf;
    }
    if (params.regime.finite && s.v > params.regime.k) {
        if (diag != nullptr) {
            std::ostringstream os;
            os << "network has v = " << s.v << " vertices but the finite population size is k = " << params.regime.k;
            *diag = os.str();
        }
        return kNegInf;
    }
    return hollywood_log_pmf_at(s, params.alpha, params.theta, params.nu);
}

double hollywood_log_pmf(const EdgeLabeledNetwork& net, const HollywoodParams& params, std::string* diag) {
    if (net.empty()) throw std::invalid_argument("log pmf requires a nonempty network");
    return hollywood_log_pmf(stats(net), params, diag);
}

double score_alpha(const NetworkStats& s, double alpha, double theta) {
    require_interior(s, alpha, theta);
    double acc = sum_j_inv_new(s, alpha, theta);
    const double psi1 = digamma(1.0 - alpha);
    for (const auto& [k, nk] : s.N) {
        if (k < 2) continue;
        acc -= static_cast<double>(nk) * (digamma(static_cast<double>(k) - alpha) - psi1);
    }
    return acc;
}

double score_theta(const NetworkStats& s, double alpha, double theta) {
    require_interior(s, alpha, theta);
    return sum_inv_new(s, alpha, theta) -
           (digamma(theta + static_cast<double>(s.m)) - digamma(theta + 1.0));
}

LogLikHessian loglik_hessian(const NetworkStats& s, double alpha, double theta) {
    require_interior(s, alpha, theta);
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;  // sums of 1, j, j^2 over (theta + j*alpha)^-2
    if (s.v >= 2) {
        if (alpha > 0.0) {
            const double r = theta / alpha;
            const double v = static_cast<double>(s.v);
            const double inv1 = sum_inv_new(s, alpha, theta);
            s1 = (trigamma(r + 1.0) - trigamma(r + v)) / (alpha * alpha);
            s2 = (inv1 - theta * s1) / alpha;
            s3 = ((v - 1.0) - 2.0 * theta * inv1 + theta * theta * s1) / (alpha * alpha);
        } else {
            for (std::uint64_t j = 1; j < s.v; ++j) {
                const double jd = static_cast<double>(j);
                const double f = 1.0 / (theta + jd * alpha);
                s1 += f * f;
                s2 += jd * f * f;
                s3 += jd * jd * f * f;
            }
        }
    }
    LogLikHessian h{-s3, -s2, -s1};
    const double tri1 = trigamma(1.0 - alpha);
    for (const auto& [k, nk] : s.N) {
        if (k < 2) continue;
        h.aa += static_cast<double>(nk) * (trigamma(static_cast<double>(k) - alpha) - tri1);
    }
    h.tt += trigamma(theta + 1.0) - trigamma(theta + static_cast<double>(s.m));
    return h;
}

AritySpec fit_nu(const NetworkStats& s) {
    if (s.e < 1) throw std::invalid_argument("fit_nu requires at least one edge");
    std::map<std::uint32_t, double> probs;
    for (const auto& [k, mk] : s.M) probs[k] = static_cast<double>(mk) / static_cast<double>(s.e);
    return AritySpec(std::move(probs));
}

HollywoodParams FitResult::params() const {
    if (regime.finite) return HollywoodParams::finite(alpha, regime.k, nu);
    return HollywoodParams::infinite(alpha, theta, nu);
}

FitResult fit_mle_infinite(const NetworkStats& s, const AritySpec& nu, bool undirected) {
    if (s.e < 2) throw std::invalid_argument("fit requires at least two edges");
    double alpha = 0.5;
    double theta = 1.0;
    bool boundary = false;
    bool converged = false;
    std::uint32_t sweeps = 0;

    const double eps = 1e-9;
    while (sweeps < 500) {
        ++sweeps;
        boundary = false;

        // alpha step at fixed theta; the score is strictly decreasing in
        // alpha (the log pmf is concave in alpha), so the bracket endpoints
        // decide whether the maximizer is interior
        const double lo = std::max(eps, -theta + eps);
        const double hi = 1.0 - eps;
        double alpha_new;
        const double flo = score_alpha(s, lo, theta);
        if (flo <= 0.0) {
            alpha_new = lo;
            boundary = true;
        } else {
            const double fhi = score_alpha(s, hi, theta);
            if (fhi >= 0.0) {
                alpha_new = hi;
                boundary = true;
            } else {
                alpha_new = solve_root([&](double a) { return score_alpha(s, a, theta); }, lo, hi, flo, fhi);
            }
        }

        // theta step at fixed alpha, reparameterized theta = -alpha + e^eta
        const auto g = [&](double eta) { return score_theta(s, alpha_new, -alpha_new + std::exp(eta)); };
        const double eta_cap = 45.0;
        double eta_lo = (theta + alpha_new > 0.0) ? std::log(theta + alpha_new) : 0.0;
        double eta_hi = eta_lo;
        double glo = g(eta_lo);
        double ghi = glo;
        // score_theta -> +inf as theta -> -alpha and is negative for large
        // theta whenever m > v, so expand both ways until the sign flips
        while (glo <= 0.0 && eta_lo > -eta_cap) {
            eta_lo = std::max(eta_lo - 4.0, -eta_cap);
            glo = g(eta_lo);
        }
        while (ghi >= 0.0 && eta_hi < eta_cap) {
            eta_hi = std::min(eta_hi + 4.0, eta_cap);
            ghi = g(eta_hi);
        }
        double theta_new;
        if (glo <= 0.0) {
            theta_new = -alpha_new + std::exp(-eta_cap);
            boundary = true;
        } else if (ghi >= 0.0) {
            theta_new = -alpha_new + std::exp(eta_cap);
            boundary = true;
        } else {
            theta_new = -alpha_new + std::exp(solve_root(g, eta_lo, eta_hi, glo, ghi));
        }

        const bool done = std::fabs(alpha_new - alpha) < 1e-8 &&
                          std::fabs(theta_new - theta) / (1.0 + std::fabs(theta_new)) < 1e-8;
        alpha = alpha_new;
        theta = theta_new;
        if (done) {
            converged = true;
            break;
        }
    }

    double se_a = quiet_nan();
    double se_t = quiet_nan();
    if (!boundary) {
        const LogLikHessian h = loglik_hessian(s, alpha, theta);
        const double det = h.aa * h.tt - h.at * h.at;  // information determinant
        if (det > 0.0 && h.aa < 0.0) {
            se_a = std::sqrt(-h.tt / det);
            se_t = std::sqrt(-h.aa / det);
        }
    }
    return FitResult{alpha,
                     theta,
                     se_a,
                     se_t,
                     hollywood_log_pmf_at(s, alpha, theta, nu),
                     nu,
                     Regime::infinite_population(),
                     sweeps,
                     converged,
                     boundary,
                     undirected};
}

FitResult fit_mle_finite(const NetworkStats& s, std::uint32_t k, const AritySpec& nu, bool undirected) {
    if (s.e < 2) throw std::invalid_argument("fit requires at least two edges");
    if (k < s.v) throw std::invalid_argument("finite regime requires k >= v(net)");
    const double kd = static_cast<double>(k);
    const auto g = [&](double a) {
        const double th = -kd * a;
        return score_alpha(s, a, th) - kd * score_theta(s, a, th);
    };

    const double hi = -1e-9;
    bool boundary = false;
    bool converged = true;
    double alpha;
    const double fhi = g(hi);
    if (fhi >= 0.0) {
        alpha = hi;  // profile likelihood still rising at alpha -> 0-
        boundary = true;
    } else {
        double A = 4.0;
        double flo = g(-A);
        while (flo <= 0.0 && A < 1e9) {
            A *= 2.0;
            flo = g(-A);
        }
        if (flo <= 0.0) {
            alpha = -A;
            boundary = true;
            converged = false;
        } else {
            alpha = solve_root(g, -A, hi, flo, fhi);
        }
    }
    const double theta = -kd * alpha;

    double se_a = quiet_nan();
    double se_t = quiet_nan();
    if (!boundary) {
        const LogLikHessian h = loglik_hessian(s, alpha, theta);
        const double d2 = h.aa - 2.0 * kd * h.at + kd * kd * h.tt;  // profile curvature
        if (d2 < 0.0) {
            se_a = std::sqrt(-1.0 / d2);
            se_t = kd * se_a;  // theta = -k*alpha
        }
    }
    return FitResult{alpha,
                     theta,
                     se_a,
                     se_t,
                     hollywood_log_pmf_at(s, alpha, theta, nu),
                     nu,
                     Regime::finite_population(k),
                     1,
                     converged,
                     boundary,
                     undirected};
}

MleFit fit_mle(const EdgeLabeledNetwork& net, const RegimeRequest& request) {
    const NetworkStats s = stats(net);
    const AritySpec nu = fit_nu(s);
    const bool undirected = !net.directed();
    switch (request.kind) {
        case RegimeRequest::Kind::Infinite:
            return MleFit{fit_mle_infinite(s, nu, undirected), std::nullopt};
        case RegimeRequest::Kind::Finite: {
            const std::uint32_t k = request.k.value_or(static_cast<std::uint32_t>(s.v));
            return MleFit{fit_mle_finite(s, k, nu, undirected), std::nullopt};
        }
        case RegimeRequest::Kind::Auto:
        default: {
            FitResult inf = fit_mle_infinite(s, nu, undirected);
            const std::uint32_t k = request.k.value_or(static_cast<std::uint32_t>(s.v));
            FitResult fin = fit_mle_finite(s, k, nu, undirected);
            if (fin.log_lik > inf.log_lik) return MleFit{std::move(fin), std::move(inf)};
            return MleFit{std::move(inf), std::move(fin)};
        }
    }
}

}  // namespace edgex
