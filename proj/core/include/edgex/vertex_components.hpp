#ifndef EDGEX_VERTEX_COMPONENTS_HPP
#define EDGEX_VERTEX_COMPONENTS_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "edgex/arity.hpp"
#include "edgex/network.hpp"
#include "edgex/rng.hpp"

namespace edgex {

// Weight sources for the vertex-components model. Vertices are discovered
// in size-biased order; the j-th discovered vertex takes the fraction B_j
// of the remaining stick, with
//   GEM(alpha, theta):           B_j ~ Beta(1 - alpha, theta + j*alpha),
//   SymmetricDirichlet(k, conc): B_j ~ Beta(1 + conc, conc*(k - j)), B_k = 1,
//   ExplicitWeights:             W_j given outright (no densities).
// The GEM source reproduces the Hollywood model with the same (alpha,
// theta) after marginalizing over the weights.
struct GemSource {
    double alpha;  // 0 < alpha < 1
    double theta;  // theta > -alpha
};
struct DirichletSource {
    std::uint32_t k;     // population size
    double concentration;  // per-coordinate Dirichlet parameter, > 0
};
struct ExplicitSource {
    std::vector<double> weights;  // nonnegative, summing to at most 1
};

struct VertexComponentsSpec {
    std::variant<GemSource, DirichletSource, ExplicitSource> source;
    AritySpec nu;

    VertexComponentsSpec(std::variant<GemSource, DirichletSource, ExplicitSource> src, AritySpec nu_);
};

struct StickBreakingSample {
    EdgeLabeledNetwork network;
    std::vector<double> weights;  // realized W_1..W_v, discovery order
};

// Simulates n edges of the vertex-components model, returning the network
// together with the realized weights (one per discovered vertex, drawn
// lazily on discovery). Throws SamplerError-wise (std::runtime_error) when
// an explicit weight list is exhausted by a new-vertex event.
StickBreakingSample stick_breaking_simulate(const VertexComponentsSpec& spec, std::uint64_t n,
                                            std::uint64_t seed, bool directed = true);

// Log of the joint density of (Y_n = net, W in dw): the nu factor
// prod_k nu_k^{M_k}, one stick-fraction density per discovered vertex and
// w_j^{D(j)-1} for the repeat appearances. Marginalizing this over the
// weights recovers the closed-form network pmf. Requires a weight per
// vertex, weights in (0,1) with partial sums < 1, and a source with
// densities (GEM or Dirichlet with v < k).
double joint_log_density(const EdgeLabeledNetwork& net, const std::vector<double>& weights,
                         const VertexComponentsSpec& spec);

// Density of the j-th stick fraction (1-based) under the spec's source.
double stick_fraction_log_pdf(const VertexComponentsSpec& spec, std::uint32_t j, double b);

}  // namespace edgex

#endif
