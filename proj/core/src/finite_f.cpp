#include "edgex/finite_f.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "edgex/rng.hpp"

namespace edgex {

FiniteF::FiniteF(std::map<FPair, double> masses) : masses_(std::move(masses)) {
    double total = 0.0;
    for (const auto& [pair, mass] : masses_) {
        const auto [i, j] = pair;
        if (i > j) throw std::invalid_argument("pair indices must be stored with i <= j");
        if (i < -1) throw std::invalid_argument("pair indices start at -1");
        if (i == -1 && j != 0) throw std::invalid_argument("-1 pairs only with 0");
        if (!(mass >= 0.0)) throw std::invalid_argument("masses must be nonnegative");
        total += mass;
    }
    if (std::fabs(total - 1.0) > 1e-12) throw std::invalid_argument("masses must sum to 1");
}

double FiniteF::mass_at(std::int32_t i, std::int32_t j) const {
    const FPair key = i <= j ? FPair{i, j} : FPair{j, i};
    auto it = masses_.find(key);
    return it == masses_.end() ? 0.0 : it->second;
}

EdgeLabeledNetwork finite_f_simulate(const FiniteF& f, std::uint64_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<RawId>> raw;
    raw.reserve(n);
    RawId blip = 0;  // runs through -1, -2, ... as fresh never-recurring ids
    for (std::uint64_t step = 0; step < n; ++step) {
        double u = rng.uniform();
        FPair pick = f.masses().rbegin()->first;
        for (const auto& [pair, mass] : f.masses()) {
            if (u < mass) {
                pick = pair;
                break;
            }
            u -= mass;
        }
        const auto [i, j] = pick;
        if (i >= 1) {
            raw.push_back({i, j});
        } else if (i == 0 && j >= 1) {
            raw.push_back({--blip, j});
        } else if (i == 0 && j == 0) {
            --blip;
            raw.push_back({blip, blip});
        } else {  // {-1, 0}: two fresh vertices
            const RawId a = --blip;
            const RawId b = --blip;
            raw.push_back({a, b});
        }
    }
    return canonicalize(raw, /*directed=*/false);
}

double Signature::pair_mass(VertexId i, VertexId j) const {
    const auto key = i <= j ? std::pair{i, j} : std::pair{j, i};
    auto it = pairs_.find(key);
    return it == pairs_.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n_);
}

double Signature::blip_with_mass(VertexId i) const {
    auto it = blip_with_.find(i);
    return it == blip_with_.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n_);
}

double Signature::blip_loop_mass() const { return static_cast<double>(blip_loop_) / static_cast<double>(n_); }

double Signature::blip_pair_mass() const { return static_cast<double>(blip_pair_) / static_cast<double>(n_); }

double Signature::vertex_mass(VertexId i) const {
    auto it = vertex_edges_.find(i);
    return it == vertex_edges_.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n_);
}

Signature signature_estimate(const EdgeLabeledNetwork& net) {
    if (net.empty()) throw std::invalid_argument("signature requires at least one edge");
    for (const auto& edge : net.edges()) {
        if (edge.arity() != 2) throw std::invalid_argument("signature is defined for binary networks");
    }

    // edges containing each vertex (a loop counts once)
    std::vector<std::uint64_t> edge_count(net.vertex_count(), 0);
    for (const auto& edge : net.edges()) {
        const VertexId a = edge[0], b = edge[1];
        ++edge_count[a - 1];
        if (b != a) ++edge_count[b - 1];
    }
    const auto recurs = [&](VertexId v) { return edge_count[v - 1] >= 2; };

    Signature sig;
    sig.n_ = net.edge_count();
    for (const auto& edge : net.edges()) {
        VertexId a = edge[0], b = edge[1];
        if (a > b) std::swap(a, b);
        if (a == b) {
            if (recurs(a)) {
                ++sig.pairs_[{a, a}];
            } else {
                ++sig.blip_loop_;
            }
        } else {
            const bool ra = recurs(a), rb = recurs(b);
            if (ra && rb) {
                ++sig.pairs_[{a, b}];
            } else if (ra || rb) {
                ++sig.blip_with_[ra ? a : b];
            } else {
                ++sig.blip_pair_;
            }
        }
    }
    for (VertexId v = 1; v <= net.vertex_count(); ++v) {
        if (recurs(v)) sig.vertex_edges_[v] = edge_count[v - 1];
    }
    return sig;
}

}  // namespace edgex
