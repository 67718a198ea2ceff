#ifndef EDGEX_STATS_HPP
#define EDGEX_STATS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "edgex/network.hpp"

namespace edgex {

// Sufficient statistics of an edge-labeled network. All of them are
// invariant under edge relabeling.
struct NetworkStats {
    std::uint64_t v = 0;  // non-isolated vertices
    std::uint64_t e = 0;  // edges
    std::uint64_t m = 0;  // total degree, sum_k k*M_k
    std::map<std::uint32_t, std::uint64_t> M;  // arity k -> number of k-ary edges
    std::map<std::uint32_t, std::uint64_t> N;  // degree k -> number of degree-k vertices

    double mean_arity() const { return e == 0 ? 0.0 : static_cast<double>(m) / static_cast<double>(e); }

    // d_k = N_k / v; undefined (nullopt) on the empty network
    std::optional<std::map<std::uint32_t, double>> degree_distribution() const;
};

NetworkStats stats(const EdgeLabeledNetwork& net);

// e / v^{mean arity}. A network sequence is sparse when this goes to 0.
// Throws std::domain_error when v = 0.
double sparsity_statistic(const NetworkStats& s);

// Classical graph projection: {u,w} with u != w is an edge iff some
// interaction contains both. Multiplicities collapse, self-loops vanish.
std::set<std::pair<VertexId, VertexId>> to_simple_graph(const EdgeLabeledNetwork& net);

// Multiset -> multiplicity map. Directed edges compare as ordered tuples;
// undirected edges are already stored sorted, so they compare as multisets.
std::map<std::vector<VertexId>, std::uint64_t> to_multiplicity(const EdgeLabeledNetwork& net);

struct ProjectionSpec {
    std::uint64_t cutoff = 0;  // keep edges with multiplicity > cutoff; 0 is the standard projection
};

// Result of thresholding edge multiplicities to a 0/1 indicator. For
// cutoff 0 every vertex survives; for larger cutoffs vertices that only
// appeared in dropped edges become isolated. Both vertex conventions are
// reported: `network`/`retained` exclude the newly isolated vertices (the
// default view), `v_original` counts them.
struct ProjectionResult {
    EdgeLabeledNetwork network;   // one edge per retained multiset, first-occurrence order
    NetworkStats retained;        // stats of `network`
    std::uint64_t v_original = 0; // vertex count of the unprojected input
};

ProjectionResult project(const EdgeLabeledNetwork& net, const ProjectionSpec& spec);

}  // namespace edgex

#endif
