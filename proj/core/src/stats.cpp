#include "edgex/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgex {

std::optional<std::map<std::uint32_t, double>> NetworkStats::degree_distribution() const {
    if (v == 0) return std::nullopt;
    std::map<std::uint32_t, double> d;
    for (const auto& [k, nk] : N) d[k] = static_cast<double>(nk) / static_cast<double>(v);
    return d;
}

NetworkStats stats(const EdgeLabeledNetwork& net) {
    NetworkStats s;
    s.v = net.vertex_count();
    s.e = net.edge_count();
    std::vector<std::uint64_t> degree(net.vertex_count(), 0);
    for (const auto& edge : net.edges()) {
        ++s.M[static_cast<std::uint32_t>(edge.arity())];
        s.m += edge.arity();
        for (VertexId v : edge) ++degree[v - 1];
    }
    for (std::uint64_t d : degree) ++s.N[static_cast<std::uint32_t>(d)];
    return s;
}

double sparsity_statistic(const NetworkStats& s) {
    if (s.v == 0) throw std::domain_error("sparsity statistic undefined for v = 0");
    return static_cast<double>(s.e) / std::pow(static_cast<double>(s.v), s.mean_arity());
}

std::set<std::pair<VertexId, VertexId>> to_simple_graph(const EdgeLabeledNetwork& net) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& edge : net.edges()) {
        const auto& ids = edge.vertices();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                if (ids[i] == ids[j]) continue;
                pairs.emplace(std::min(ids[i], ids[j]), std::max(ids[i], ids[j]));
            }
        }
    }
    return pairs;
}

std::map<std::vector<VertexId>, std::uint64_t> to_multiplicity(const EdgeLabeledNetwork& net) {
    std::map<std::vector<VertexId>, std::uint64_t> counts;
    for (const auto& edge : net.edges()) ++counts[edge.vertices()];
    return counts;
}

ProjectionResult project(const EdgeLabeledNetwork& net, const ProjectionSpec& spec) {
    const auto counts = to_multiplicity(net);
    std::vector<std::vector<RawId>> kept;
    std::set<std::vector<VertexId>> emitted;
    for (const auto& edge : net.edges()) {  // first-occurrence order
        const auto& key = edge.vertices();
        if (counts.at(key) > spec.cutoff && emitted.insert(key).second) {
            kept.emplace_back(key.begin(), key.end());
        }
    }
    EdgeLabeledNetwork projected = canonicalize(kept, net.directed());
    NetworkStats retained = stats(projected);
    return ProjectionResult{std::move(projected), std::move(retained), net.vertex_count()};
}

}  // namespace edgex
