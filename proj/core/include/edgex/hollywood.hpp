#ifndef EDGEX_HOLLYWOOD_HPP
#define EDGEX_HOLLYWOOD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "edgex/arity.hpp"
#include "edgex/growth_trace.hpp"
#include "edgex/network.hpp"
#include "edgex/rng.hpp"

namespace edgex {

// Parameter regimes of the Hollywood model:
//   infinite population: 0 < alpha < 1 and theta > -alpha, v(Y_n) -> inf;
//   finite population:   alpha < 0 and theta = -k*alpha, v(Y_n) -> k.
struct Regime {
    bool finite = false;
    std::uint32_t k = 0;  // population size; meaningful iff finite

    static Regime infinite_population() { return {false, 0}; }
    static Regime finite_population(std::uint32_t k) { return {true, k}; }
    bool operator==(const Regime&) const = default;
};

struct HollywoodParams {
    double alpha;
    double theta;
    Regime regime;
    AritySpec nu;

    HollywoodParams(double alpha, double theta, Regime regime, AritySpec nu);

    static HollywoodParams infinite(double alpha, double theta, AritySpec nu) {
        return HollywoodParams(alpha, theta, Regime::infinite_population(), std::move(nu));
    }
    // theta is pinned to -k*alpha
    static HollywoodParams finite(double alpha, std::uint32_t k, AritySpec nu) {
        return HollywoodParams(alpha, -static_cast<double>(k) * alpha, Regime::finite_population(k), std::move(nu));
    }
};

// Occupancy state of the urn: per-vertex role counts in canonical id
// order. Derivable from the network it was grown with, and validated
// against it when a simulation is resumed.
struct UrnState {
    std::vector<std::uint64_t> occupancy;  // D(i), all >= 1
    std::uint64_t total_degree = 0;        // m = sum D(i)
    std::uint64_t edges = 0;

    std::uint64_t vertex_count() const { return occupancy.size(); }
};

// One role draw: existing vertex i with weight D(i) - alpha, a fresh
// vertex with weight theta + alpha*V, normalized by theta + m. Does not
// mutate the state. Returns V+1 for a fresh vertex.
VertexId hollywood_draw_role(const UrnState& state, const HollywoodParams& params, Rng& rng);

// Sequential construction of the Hollywood process. Grows a directed
// canonical network edge by edge; the undirected view is obtained by
// canonicalizing without orientations at the end.
class HollywoodSampler {
public:
    HollywoodSampler(HollywoodParams params, std::uint64_t seed);
    // Resume from an existing network. Throws if the state is inconsistent
    // with the network or violates the regime (e.g. more vertices than the
    // finite population allows).
    HollywoodSampler(HollywoodParams params, std::uint64_t seed, const EdgeLabeledNetwork& net,
                     const UrnState& state);

    void add_edges(std::uint64_t count, GrowthTrace* trace = nullptr);

    const UrnState& state() const { return state_; }
    EdgeLabeledNetwork network(bool directed = true) const;

private:
    void add_one_edge();

    HollywoodParams params_;
    Rng rng_;
    UrnState state_;
    std::vector<std::vector<RawId>> edges_;
};

struct HollywoodSample {
    EdgeLabeledNetwork network;
    UrnState state;
};

// n >= 1 edges from scratch; deterministic given (params, n, seed).
HollywoodSample hollywood_simulate(const HollywoodParams& params, std::uint64_t n, std::uint64_t seed,
                                   GrowthTrace* trace = nullptr, bool directed = true);

// Extends an existing sample by `extra` edges with a fresh seed stream.
// Distributionally identical to simulating edges + extra from scratch.
HollywoodSample hollywood_extend(const EdgeLabeledNetwork& net, const UrnState& state,
                                 const HollywoodParams& params, std::uint64_t extra, std::uint64_t seed,
                                 GrowthTrace* trace = nullptr, bool directed = true);

}  // namespace edgex

#endif
