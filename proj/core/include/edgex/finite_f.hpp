#ifndef EDGEX_FINITE_F_HPP
#define EDGEX_FINITE_F_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "edgex/network.hpp"

namespace edgex {

// Pair indices of the binary-edge mass table. Vertices i, j >= 1 are
// persistent slots; the special labels encode blips (vertices that appear
// in one edge and never again):
//   {0, j}, j >= 1 : a blip paired with persistent vertex j
//   {0, 0}         : a loop at a blip vertex
//   {-1, 0}        : an edge joining two blip vertices
using FPair = std::pair<std::int32_t, std::int32_t>;  // stored with first <= second

// An element of the binary-pair simplex with finite support. Masses are
// nonnegative and sum to 1 within 1e-12; the only admissible key with
// index -1 is {-1, 0}.
class FiniteF {
public:
    explicit FiniteF(std::map<FPair, double> masses);

    const std::map<FPair, double>& masses() const { return masses_; }

    // sum of masses involving persistent vertex i
    double mass_at(std::int32_t i, std::int32_t j) const;

private:
    std::map<FPair, double> masses_;
};

// Draws n i.i.d. pairs from f and realizes them as an undirected binary
// edge-labeled network, giving blip events fresh vertices that never
// recur. Edge exchangeable by construction.
EdgeLabeledNetwork finite_f_simulate(const FiniteF& f, std::uint64_t n, std::uint64_t seed);

// Empirical signature of a binary network at finite n. The mass of each
// edge goes to the pair of its canonical vertex ids when both endpoints
// recur (appear in some other edge); otherwise it is routed to the
// residual buckets exactly as the limiting definitions prescribe, with
// "recurs" standing in for "has positive limiting frequency":
//   one endpoint recurs  -> {0, i}
//   neither, loop        -> {0, 0}
//   neither, non-loop    -> {-1, 0}
// Counts are kept as integers over n edges, so the masses sum to 1
// exactly.
class Signature {
public:
    std::uint64_t edge_total() const { return n_; }

    const std::map<std::pair<VertexId, VertexId>, std::uint64_t>& pair_counts() const { return pairs_; }
    const std::map<VertexId, std::uint64_t>& blip_with_counts() const { return blip_with_; }
    std::uint64_t blip_loop_count() const { return blip_loop_; }
    std::uint64_t blip_pair_count() const { return blip_pair_; }

    double pair_mass(VertexId i, VertexId j) const;
    double blip_with_mass(VertexId i) const;   // f_{0,i}
    double blip_loop_mass() const;             // f_{0,0}
    double blip_pair_mass() const;             // f_{-1,0}

    // f_dot^(i): fraction of edges containing vertex i (recurring i only)
    const std::map<VertexId, std::uint64_t>& vertex_edge_counts() const { return vertex_edges_; }
    double vertex_mass(VertexId i) const;

private:
    friend Signature signature_estimate(const EdgeLabeledNetwork& net);

    std::uint64_t n_ = 0;
    std::map<std::pair<VertexId, VertexId>, std::uint64_t> pairs_;
    std::map<VertexId, std::uint64_t> blip_with_;
    std::uint64_t blip_loop_ = 0;
    std::uint64_t blip_pair_ = 0;
    std::map<VertexId, std::uint64_t> vertex_edges_;
};

// Throws std::invalid_argument on an empty or non-binary network.
Signature signature_estimate(const EdgeLabeledNetwork& net);

}  // namespace edgex

#endif
