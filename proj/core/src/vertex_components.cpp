#include "edgex/vertex_components.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "edgex/stats.hpp"

namespace edgex {

namespace {

double log_beta_pdf(double x, double a, double b) {
    if (!(x > 0.0 && x < 1.0)) return -std::numeric_limits<double>::infinity();
    return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) + std::lgamma(a + b) - std::lgamma(a) -
           std::lgamma(b);
}

}  // namespace

VertexComponentsSpec::VertexComponentsSpec(std::variant<GemSource, DirichletSource, ExplicitSource> src,
                                           AritySpec nu_)
    : source(std::move(src)), nu(std::move(nu_)) {
    if (const auto* gem = std::get_if<GemSource>(&source)) {
        if (!(gem->alpha > 0.0 && gem->alpha < 1.0)) throw std::invalid_argument("GEM requires 0 < alpha < 1");
        if (!(gem->theta > -gem->alpha)) throw std::invalid_argument("GEM requires theta > -alpha");
    } else if (const auto* dir = std::get_if<DirichletSource>(&source)) {
        if (dir->k < 1) throw std::invalid_argument("Dirichlet source requires k >= 1");
        if (!(dir->concentration > 0.0)) throw std::invalid_argument("Dirichlet concentration must be > 0");
    } else {
        const auto& w = std::get<ExplicitSource>(source).weights;
        double total = 0.0;
        for (double x : w) {
            if (!(x >= 0.0)) throw std::invalid_argument("explicit weights must be nonnegative");
            total += x;
        }
        if (total > 1.0 + 1e-12) throw std::invalid_argument("explicit weights must sum to at most 1");
    }
}

double stick_fraction_log_pdf(const VertexComponentsSpec& spec, std::uint32_t j, double b) {
    if (const auto* gem = std::get_if<GemSource>(&spec.source)) {
        return log_beta_pdf(b, 1.0 - gem->alpha, gem->theta + static_cast<double>(j) * gem->alpha);
    }
    if (const auto* dir = std::get_if<DirichletSource>(&spec.source)) {
        if (j >= dir->k)
            throw std::domain_error("stick fraction density undefined at the last Dirichlet vertex");
        return log_beta_pdf(b, 1.0 + dir->concentration,
                            dir->concentration * static_cast<double>(dir->k - j));
    }
    throw std::domain_error("explicit weight source has no stick densities");
}

StickBreakingSample stick_breaking_simulate(const VertexComponentsSpec& spec, std::uint64_t n,
                                            std::uint64_t seed, bool directed) {
    Rng rng(seed);
    std::vector<double> weights;
    double weight_sum = 0.0;

    const auto* gem = std::get_if<GemSource>(&spec.source);
    const auto* dir = std::get_if<DirichletSource>(&spec.source);
    const auto* expl = std::get_if<ExplicitSource>(&spec.source);

    auto discover_vertex = [&]() {
        const std::uint32_t j = static_cast<std::uint32_t>(weights.size()) + 1;
        const double remaining = 1.0 - weight_sum;
        double w;
        if (gem != nullptr) {
            const double b = rng.beta(1.0 - gem->alpha, gem->theta + static_cast<double>(j) * gem->alpha);
            w = b * remaining;
        } else if (dir != nullptr) {
            if (j > dir->k) throw std::runtime_error("Dirichlet source exhausted: all k vertices discovered");
            const double b = (j == dir->k)
                                 ? 1.0
                                 : rng.beta(1.0 + dir->concentration,
                                            dir->concentration * static_cast<double>(dir->k - j));
            w = b * remaining;
        } else {
            if (j > expl->weights.size())
                throw std::runtime_error("explicit weights exhausted by a new-vertex event");
            w = expl->weights[j - 1];
        }
        weights.push_back(w);
        weight_sum += w;
    };

    std::vector<std::vector<RawId>> edges;
    edges.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint32_t k = spec.nu.sample(rng);
        std::vector<RawId> edge;
        edge.reserve(k);
        for (std::uint32_t r = 0; r < k; ++r) {
            double u = rng.uniform();
            std::size_t pick = weights.size();  // falls through to "new vertex"
            for (std::size_t idx = 0; idx < weights.size(); ++idx) {
                if (u < weights[idx]) {
                    pick = idx;
                    break;
                }
                u -= weights[idx];
            }
            if (pick == weights.size()) {
                if (dir != nullptr && weights.size() == dir->k) {
                    pick = weights.size() - 1;  // full stick already dealt; rounding guard
                } else {
                    discover_vertex();
                }
            }
            edge.push_back(static_cast<RawId>(pick + 1));
        }
        edges.push_back(std::move(edge));
    }
    return {canonicalize(edges, directed), std::move(weights)};
}

double joint_log_density(const EdgeLabeledNetwork& net, const std::vector<double>& weights,
                         const VertexComponentsSpec& spec) {
    if (weights.size() != net.vertex_count())
        throw std::invalid_argument("need exactly one weight per vertex");
    double prefix = 0.0;
    for (double w : weights) {
        if (!(w > 0.0 && w < 1.0)) throw std::domain_error("weights must lie in (0, 1)");
        prefix += w;
        if (prefix >= 1.0) throw std::domain_error("weight partial sums must stay below 1");
    }

    const NetworkStats s = stats(net);
    double acc = 0.0;
    for (const auto& [k, mk] : s.M) {
        if (!spec.nu.supports(k)) return -std::numeric_limits<double>::infinity();
        acc += static_cast<double>(mk) * std::log(spec.nu.prob(k));
    }

    std::vector<std::uint64_t> degree(net.vertex_count(), 0);
    for (const auto& edge : net.edges())
        for (VertexId v : edge) ++degree[v - 1];

    double remaining = 1.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        acc += stick_fraction_log_pdf(spec, static_cast<std::uint32_t>(j) + 1, weights[j] / remaining);
        acc += (static_cast<double>(degree[j]) - 1.0) * std::log(weights[j]);
        remaining -= weights[j];
    }
    return acc;
}

}  // namespace edgex
