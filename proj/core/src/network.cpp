#include "edgex/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace edgex {

Interaction::Interaction(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("interaction must contain at least one vertex");
    for (VertexId v : vertices_) {
        if (v == 0) throw std::invalid_argument("vertex identifiers are positive integers");
    }
}

namespace {

struct CanonicalParts {
    std::vector<Interaction> edges;
    std::size_t vertex_count;
};

CanonicalParts make_directed_canonical(const std::vector<std::vector<RawId>>& raw) {
    std::unordered_map<RawId, VertexId> label;
    label.reserve(raw.size());
    std::vector<Interaction> edges;
    edges.reserve(raw.size());
    VertexId next = 1;
    for (const auto& e : raw) {
        std::vector<VertexId> ids;
        ids.reserve(e.size());
        for (RawId r : e) {
            auto [it, fresh] = label.try_emplace(r, next);
            if (fresh) ++next;
            ids.push_back(it->second);
        }
        edges.emplace_back(std::move(ids));
    }
    return {std::move(edges), static_cast<std::size_t>(next - 1)};
}

// Occurrence signature of one vertex: (edge index, multiplicity) pairs in
// edge order. Signatures are compared as if they were the full per-edge
// multiplicity sequences, descending lexicographically, so earlier and
// heavier occurrences sort first.
struct Occurrences {
    std::vector<std::pair<std::size_t, std::uint32_t>> at;
    std::size_t first_seen;  // scan position; only breaks fully tied pairs
};

bool signature_before(const Occurrences& a, const Occurrences& b) {
    const std::size_t n = std::min(a.at.size(), b.at.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [ea, ma] = a.at[i];
        const auto& [eb, mb] = b.at[i];
        if (ea != eb) return ea < eb;
        if (ma != mb) return ma > mb;
    }
    if (a.at.size() != b.at.size()) return a.at.size() > b.at.size();
    return a.first_seen < b.first_seen;
}

CanonicalParts make_undirected_canonical(const std::vector<std::vector<RawId>>& raw) {
    std::unordered_map<RawId, std::size_t> index;  // raw id -> slot in verts
    std::vector<Occurrences> verts;
    std::size_t scan_pos = 0;

    for (std::size_t e = 0; e < raw.size(); ++e) {
        for (RawId r : raw[e]) {
            auto [it, fresh] = index.try_emplace(r, verts.size());
            if (fresh) verts.push_back(Occurrences{{}, scan_pos});
            auto& occ = verts[it->second].at;
            if (!occ.empty() && occ.back().first == e) {
                ++occ.back().second;
            } else {
                occ.emplace_back(e, 1);
            }
            ++scan_pos;
        }
    }

    std::vector<std::size_t> order(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return signature_before(verts[x], verts[y]);
    });
    std::vector<VertexId> canon(verts.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) canon[order[rank]] = static_cast<VertexId>(rank + 1);

    std::vector<Interaction> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        std::vector<VertexId> ids;
        ids.reserve(e.size());
        for (RawId r : e) ids.push_back(canon[index.at(r)]);
        std::sort(ids.begin(), ids.end());
        edges.emplace_back(std::move(ids));
    }
    return {std::move(edges), verts.size()};
}

}  // namespace

EdgeLabeledNetwork canonicalize(const std::vector<std::vector<RawId>>& raw, bool directed) {
    for (const auto& e : raw) {
        if (e.empty()) throw std::invalid_argument("interaction must contain at least one vertex");
    }
    CanonicalParts parts = directed ? make_directed_canonical(raw) : make_undirected_canonical(raw);
    return EdgeLabeledNetwork(std::move(parts.edges), parts.vertex_count, directed);
}

EdgeLabeledNetwork canonicalize(const std::vector<Interaction>& raw, bool directed) {
    std::vector<std::vector<RawId>> ids;
    ids.reserve(raw.size());
    for (const auto& e : raw) ids.emplace_back(e.begin(), e.end());
    return canonicalize(ids, directed);
}

EdgeLabeledNetwork relabel_edges(const EdgeLabeledNetwork& net, const std::vector<std::size_t>& perm) {
    const std::size_t n = net.edge_count();
    if (perm.size() != n) throw std::invalid_argument("permutation size does not match edge count");
    std::vector<std::vector<RawId>> out(n);
    std::vector<bool> hit(n, false);
    for (std::size_t old = 1; old <= n; ++old) {
        const std::size_t target = perm[old - 1];
        if (target < 1 || target > n || hit[target - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        hit[target - 1] = true;
        const auto& e = net.edge(old);
        out[target - 1].assign(e.begin(), e.end());
    }
    return canonicalize(out, net.directed());
}

EdgeLabeledNetwork restrict(const EdgeLabeledNetwork& net, const std::vector<std::size_t>& keep) {
    std::vector<std::vector<RawId>> out;
    out.reserve(keep.size());
    for (std::size_t label : keep) {
        if (label < 1 || label > net.edge_count()) throw std::invalid_argument("edge label out of range");
        const auto& e = net.edge(label);
        out.emplace_back(e.begin(), e.end());
    }
    return canonicalize(out, net.directed());
}

}  // namespace edgex
