#include "edgex/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgex {

double theoretical_degree_pmf(double alpha, std::uint32_t k) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("degree law requires 0 < alpha < 1");
    if (k < 1) throw std::invalid_argument("degree must be >= 1");
    const double kd = static_cast<double>(k);
    // alpha * Gamma(k - alpha) / (Gamma(1 - alpha) * k!)
    return alpha * std::exp(std::lgamma(kd - alpha) - std::lgamma(1.0 - alpha) - std::lgamma(kd + 1.0));
}

double theoretical_degree_tail(double alpha, std::uint32_t K) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("degree law requires 0 < alpha < 1");
    const double Kd = static_cast<double>(K);
    return std::exp(std::lgamma(Kd + 1.0 - alpha) - std::lgamma(Kd + 1.0) - std::lgamma(1.0 - alpha));
}

double expected_vertices_asymptote(double alpha, double theta, double mu, std::uint64_t n) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("asymptote requires 0 < alpha < 1");
    if (!(theta > -alpha)) throw std::domain_error("asymptote requires theta > -alpha");
    if (!(mu >= 1.0)) throw std::invalid_argument("mean arity must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double c = std::exp(std::lgamma(theta + 1.0) - std::lgamma(theta + alpha)) / alpha;
    return c * std::pow(mu * static_cast<double>(n), alpha);
}

AlphaDiversityEstimate alpha_diversity_estimate(const GrowthTrace& trace, double alpha) {
    if (trace.empty()) throw std::invalid_argument("empty growth trace");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("alpha diversity requires 0 < alpha < 1");
    AlphaDiversityEstimate est{0.0, {}};
    for (const auto& p : trace.points) {
        if (p.e == 0) throw std::domain_error("alpha diversity undefined at e = 0");
        est.trail.emplace_back(p.step, static_cast<double>(p.v) / std::pow(static_cast<double>(p.e), alpha));
    }
    est.value = est.trail.back().second;
    return est;
}

std::vector<std::pair<std::uint64_t, double>> sparsity_curve(const GrowthTrace& trace) {
    std::vector<std::pair<std::uint64_t, double>> curve;
    curve.reserve(trace.points.size());
    for (const auto& p : trace.points) {
        if (p.v == 0) throw std::domain_error("sparsity statistic undefined for v = 0");
        const double m_avg = static_cast<double>(p.m) / static_cast<double>(p.e);
        curve.emplace_back(p.step, static_cast<double>(p.e) / std::pow(static_cast<double>(p.v), m_avg));
    }
    return curve;
}

double predict_new_vertex_probability(const NetworkStats& s, const HollywoodParams& params) {
    if (s.v == 0) return 1.0;
    const double m = static_cast<double>(s.m);
    const double v = static_cast<double>(s.v);
    const double base_old = m - params.alpha * v;
    double p_no_new = 0.0;
    for (const auto& [k, nu_k] : params.nu.probabilities()) {
        double prod = 1.0;
        for (std::uint32_t j = 0; j < k; ++j) {
            prod *= (base_old + j) / (params.theta + m + j);
        }
        p_no_new += nu_k * prod;
    }
    return 1.0 - p_no_new;
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

SparsityTestResult sparsity_test(const FitResult& fit, double mu) {
    if (fit.regime.finite)
        throw std::invalid_argument(
            "sparsity test refused: testing for sparsity makes sense only if the population is "
            "infinite; the finite regime (alpha < 0) keeps v bounded");
    if (!(mu >= 1.0)) throw std::invalid_argument("mean arity must be >= 1");
    if (!(fit.se_alpha > 0.0)) throw std::invalid_argument("fit has no usable standard error");

    SparsityTestResult r;
    r.threshold = 1.0 / mu;
    r.null_hypothesis = "H0: alpha <= 1/mu (not sparse) vs H1: 1/mu < alpha < 1 (sparse)";
    r.alpha_hat = fit.alpha;
    r.se_alpha = fit.se_alpha;
    r.wald = (fit.alpha - r.threshold) / fit.se_alpha;
    r.p_value = 1.0 - normal_cdf(r.wald);
    r.reject_at_05 = r.p_value < 0.05;
    r.caveat =
        "The test presupposes an infinite vertex population (0 < alpha < 1). On projected "
        "(multiplicity-thresholded) data it is degenerate: the projected network is sparse for all "
        "0 < alpha < 1, so the sparse and infinite-population ranges coincide.";
    return r;
}

double loglog_degree_slope(const NetworkStats& s) {
    if (s.v == 0) return std::nan("");
    // 95th percentile of the degree distribution
    std::uint64_t seen = 0;
    std::uint32_t k95 = s.N.rbegin()->first;
    for (const auto& [k, nk] : s.N) {
        seen += nk;
        if (static_cast<double>(seen) >= 0.95 * static_cast<double>(s.v)) {
            k95 = k;
            break;
        }
    }
    std::vector<std::pair<double, double>> pts;
    for (const auto& [k, nk] : s.N) {
        if (nk < 5 || k > k95) continue;
        pts.emplace_back(std::log(static_cast<double>(k)),
                         std::log(static_cast<double>(nk) / static_cast<double>(s.v)));
    }
    if (pts.size() < 2) return std::nan("");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

GrowthTrace observed_growth_trace(const EdgeLabeledNetwork& net) {
    GrowthTrace trace;
    const auto checkpoints = growth_checkpoints(net.edge_count());
    std::size_t next_cp = 0;
    std::uint64_t m = 0;
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < net.edge_count(); ++i) {
        const auto& edge = net.edge(i + 1);
        m += edge.arity();
        for (VertexId id : edge) v = std::max<std::uint64_t>(v, id);  // canonical ids appear in order
        const std::uint64_t step = i + 1;
        if (next_cp < checkpoints.size() && step == checkpoints[next_cp]) {
            trace.points.push_back({step, v, step, m});
            ++next_cp;
        }
    }
    return trace;
}

}  // namespace edgex
