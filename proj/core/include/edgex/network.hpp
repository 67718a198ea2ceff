#ifndef EDGEX_NETWORK_HPP
#define EDGEX_NETWORK_HPP

#include <cstdint>
#include <vector>

namespace edgex {

// Canonical vertex identifiers are 1..v. Raw ingestion identifiers are
// arbitrary 64-bit integers (file tokens are mapped to these first).
using VertexId = std::uint32_t;
using RawId = std::int64_t;

// One interaction: an ordered finite multiset of vertices. Repeats are
// allowed (an actor may hold two roles in the same movie).
class Interaction {
public:
    explicit Interaction(std::vector<VertexId> vertices);

    std::size_t arity() const { return vertices_.size(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool operator==(const Interaction&) const = default;
    bool operator<(const Interaction& other) const { return vertices_ < other.vertices_; }

private:
    std::vector<VertexId> vertices_;
};

// A finite sequence of interactions with vertices numbered in order of
// first appearance; the positions in the sequence are the edge labels
// 1..n. Instances are always in canonical form:
//
//   - vertex ids are exactly {1, ..., v}, and vertex j first appears no
//     later than vertex j+1 when scanning edges in label order and, within
//     an edge, positions left to right;
//   - when directed == false each edge's id sequence is nondecreasing.
//
// canonicalize() is the only way to build one, so the invariants hold by
// construction. Values are immutable and safe to share across threads.
class EdgeLabeledNetwork {
public:
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t vertex_count() const { return vertex_count_; }
    bool directed() const { return directed_; }
    bool empty() const { return edges_.empty(); }

    const Interaction& edge(std::size_t label) const { return edges_[label - 1]; }  // labels are 1-based
    const std::vector<Interaction>& edges() const { return edges_; }

    bool operator==(const EdgeLabeledNetwork&) const = default;

    friend EdgeLabeledNetwork canonicalize(const std::vector<std::vector<RawId>>& raw, bool directed);

private:
    EdgeLabeledNetwork(std::vector<Interaction> edges, std::size_t vertex_count, bool directed)
        : edges_(std::move(edges)), vertex_count_(vertex_count), directed_(directed) {}

    std::vector<Interaction> edges_;
    std::size_t vertex_count_ = 0;
    bool directed_ = true;
};

// Builds the canonical representative of the edge-labeled network induced
// by a raw interaction sequence. Two raw inputs that differ only by a
// bijection of their vertex identifiers produce identical outputs.
//
// Directed input: vertices are numbered by first appearance, scanning
// edges in order and positions left to right.
//
// Undirected input: each edge is a multiset, so position order carries no
// information. Vertices are ordered by their occurrence signature (the
// per-edge multiplicity sequence, compared lexicographically, earlier and
// heavier occurrences first). This is the "smallest labels consistent with
// the structure" rule: a vertex introduced together with others in one
// edge keeps a smaller label iff a later edge distinguishes it first.
// Vertices whose signatures never diverge are interchangeable and the
// printed form does not depend on how they are ordered.
//
// Throws std::invalid_argument on an empty interaction.
EdgeLabeledNetwork canonicalize(const std::vector<std::vector<RawId>>& raw, bool directed);

// Convenience overload for re-canonicalizing interactions that already
// carry (not necessarily canonical) small ids.
EdgeLabeledNetwork canonicalize(const std::vector<Interaction>& raw, bool directed);

// Edge i of the result is edge perm^-1(i) of the input, re-canonicalized.
// perm maps old labels to new labels (1-based). Throws std::invalid_argument
// if perm is not a permutation of 1..n.
EdgeLabeledNetwork relabel_edges(const EdgeLabeledNetwork& net, const std::vector<std::size_t>& perm);

// Keeps the edges whose labels are in `keep` (order preserved) and
// re-canonicalizes. An empty keep set yields the empty network.
EdgeLabeledNetwork restrict(const EdgeLabeledNetwork& net, const std::vector<std::size_t>& keep);

}  // namespace edgex

#endif
