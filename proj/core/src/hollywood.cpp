#include "edgex/hollywood.hpp"

#include <cmath>
#include <stdexcept>

#include "edgex/stats.hpp"

namespace edgex {

HollywoodParams::HollywoodParams(double alpha_, double theta_, Regime regime_, AritySpec nu_)
    : alpha(alpha_), theta(theta_), regime(regime_), nu(std::move(nu_)) {
    if (regime.finite) {
        if (!(alpha < 0.0)) throw std::invalid_argument("finite regime requires alpha < 0");
        if (regime.k < 1) throw std::invalid_argument("finite regime requires k >= 1");
        if (theta != -static_cast<double>(regime.k) * alpha)
            throw std::invalid_argument("finite regime requires theta = -k*alpha exactly");
    } else {
        if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("infinite regime requires 0 < alpha < 1");
        if (!(theta > -alpha)) throw std::invalid_argument("infinite regime requires theta > -alpha");
    }
}

std::vector<std::uint64_t> growth_checkpoints(std::uint64_t n) {
    std::vector<std::uint64_t> steps;
    double x = 1.0;
    std::uint64_t last = 0;
    while (true) {
        const std::uint64_t s = static_cast<std::uint64_t>(std::ceil(x));
        if (s >= n) break;
        if (s != last) steps.push_back(s);
        last = s;
        x *= 1.5;
    }
    if (n >= 1) steps.push_back(n);
    return steps;
}

VertexId hollywood_draw_role(const UrnState& state, const HollywoodParams& params, Rng& rng) {
    const std::uint64_t V = state.vertex_count();
    if (V == 0) return 1;  // first role is always a fresh vertex
    const double alpha = params.alpha;
    const double total = params.theta + static_cast<double>(state.total_degree);
    const double old_mass = static_cast<double>(state.total_degree) - alpha * static_cast<double>(V);
    double u = rng.uniform() * total;
    if (u >= old_mass) return static_cast<VertexId>(V + 1);
    for (std::uint64_t i = 0; i < V; ++i) {
        u -= static_cast<double>(state.occupancy[i]) - alpha;
        if (u < 0.0) return static_cast<VertexId>(i + 1);
    }
    return static_cast<VertexId>(V);  // rounding guard
}

HollywoodSampler::HollywoodSampler(HollywoodParams params, std::uint64_t seed)
    : params_(std::move(params)), rng_(seed) {}

HollywoodSampler::HollywoodSampler(HollywoodParams params, std::uint64_t seed, const EdgeLabeledNetwork& net,
                                   const UrnState& state)
    : params_(std::move(params)), rng_(seed), state_(state) {
    if (!net.directed()) throw std::invalid_argument("resume requires the directed canonical network");
    if (state.edges != net.edge_count() || state.vertex_count() != net.vertex_count())
        throw std::invalid_argument("urn state inconsistent with network");
    NetworkStats s = stats(net);
    if (s.m != state.total_degree) throw std::invalid_argument("urn state inconsistent with network");
    std::vector<std::uint64_t> degree(net.vertex_count(), 0);
    for (const auto& edge : net.edges())
        for (VertexId v : edge) ++degree[v - 1];
    if (degree != state.occupancy) throw std::invalid_argument("urn state inconsistent with network");
    if (params_.regime.finite && state.vertex_count() > params_.regime.k)
        throw std::invalid_argument("state has more vertices than the finite population allows");
    edges_.reserve(net.edge_count());
    for (const auto& edge : net.edges()) edges_.emplace_back(edge.begin(), edge.end());
}

void HollywoodSampler::add_one_edge() {
    const std::uint32_t k = params_.nu.sample(rng_);
    std::vector<RawId> edge;
    edge.reserve(k);
    for (std::uint32_t j = 0; j < k; ++j) {
        const VertexId id = hollywood_draw_role(state_, params_, rng_);
        if (id == state_.vertex_count() + 1) {
            state_.occupancy.push_back(1);
        } else {
            ++state_.occupancy[id - 1];
        }
        ++state_.total_degree;
        edge.push_back(static_cast<RawId>(id));
    }
    ++state_.edges;
    edges_.push_back(std::move(edge));
}

void HollywoodSampler::add_edges(std::uint64_t count, GrowthTrace* trace) {
    if (trace == nullptr) {
        for (std::uint64_t i = 0; i < count; ++i) add_one_edge();
        return;
    }
    const std::uint64_t target = state_.edges + count;
    auto checkpoints = growth_checkpoints(target);
    std::size_t next_cp = 0;
    while (next_cp < checkpoints.size() && checkpoints[next_cp] <= state_.edges) ++next_cp;
    for (std::uint64_t i = 0; i < count; ++i) {
        add_one_edge();
        if (next_cp < checkpoints.size() && state_.edges == checkpoints[next_cp]) {
            trace->points.push_back({state_.edges, state_.vertex_count(), state_.edges, state_.total_degree});
            ++next_cp;
        }
    }
}

EdgeLabeledNetwork HollywoodSampler::network(bool directed) const {
    // New vertices were numbered in first-appearance order, so the directed
    // canonicalization is a relabeling no-op; the undirected pass sorts
    // within edges.
    return canonicalize(edges_, directed);
}

HollywoodSample hollywood_simulate(const HollywoodParams& params, std::uint64_t n, std::uint64_t seed,
                                   GrowthTrace* trace, bool directed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    HollywoodSampler sampler(params, seed);
    sampler.add_edges(n, trace);
    return {sampler.network(directed), sampler.state()};
}

HollywoodSample hollywood_extend(const EdgeLabeledNetwork& net, const UrnState& state,
                                 const HollywoodParams& params, std::uint64_t extra, std::uint64_t seed,
                                 GrowthTrace* trace, bool directed) {
    HollywoodSampler sampler(params, seed, net, state);
    sampler.add_edges(extra, trace);
    return {sampler.network(directed), sampler.state()};
}

}  // namespace edgex
