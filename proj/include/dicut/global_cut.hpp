#pragma once

#include <functional>
#include <vector>

#include "dicut/graph.hpp"
#include "dicut/rng.hpp"
#include "dicut/rooted_vertex.hpp"

namespace dicut {

// Far-away sets: F+(v) = V \ ({v} u N+(v)) cannot be reached from v within
// one edge; F-(v) = V \ ({v} u N-(v)) cannot reach v within one edge.
VertexSet forward_far_set(const WeightedDigraph& g, int v);
VertexSet backward_far_set(const WeightedDigraph& g, int v);
// vol+(F-(y)) computed via m - sum of out-degrees over {y} u N-(y).
std::int64_t far_backward_out_volume(const WeightedDigraph& g, int y);

struct RootSamplingParams {
    Weight wstar = 0;                        // max_v w(F+(v))
    std::vector<Rational> perVertexProb;     // min{1, 2w(y)/w*}
    std::vector<Weight> farForwardWeight;    // w(F+(v)) per vertex
};

RootSamplingParams compute_root_sampling_params(const WeightedDigraph& g);

// Bernoulli per-vertex selection, drop roots with empty F-(y), then the
// Markov trim: return the empty set whenever sum vol+(F-(y)) exceeds 8m.
VertexSet sample_roots(const WeightedDigraph& g, RngStream& rng);
VertexSet sample_roots(const WeightedDigraph& g, const RootSamplingParams& params, RngStream& rng);

// The trim rule alone: empty set iff sum_{y in roots} vol+(F-(y)) > 8m.
VertexSet apply_markov_trim(const WeightedDigraph& g, VertexSet roots);

// G_y: all edges into y plus all edges leaving F-(y); rooted feasible
// solutions with root y coincide between G_y and G.
WeightedDigraph build_root_sparsifier(const WeightedDigraph& g, int y);

struct ReductionBudget {
    std::int64_t maxQueries = 0;          // ceil(9m / (n-1))
    std::int64_t maxTotalQueryEdges = 0;  // 9m
    std::int64_t queries = 0;
    std::int64_t queryEdges = 0;
};

ReductionBudget make_reduction_budget(const WeightedDigraph& g);

// Oracle contract: given (G', y*) with V(G') = V(G) and a feasible rooted
// cut existing, return a feasible cut that is (1+eps)-optimal with
// probability at least 1/2.
using RootedVertexOracle = std::function<VertexCut(const WeightedDigraph&, int)>;

struct GlobalVertexCutStats {
    std::vector<std::int64_t> runQueries;     // one entry per wrapper half-run
    std::vector<std::int64_t> runQueryEdges;
    std::vector<Weight> runValues;
    int discardedRuns = 0;
};

EdgeCut global_min_edge_cut(const WeightedDigraph& g, Rational eps, RngStream rng, int repeats);

VertexCut global_min_vertex_cut(const WeightedDigraph& g, Rational eps, const RootedVertexOracle& oracle,
                                RngStream rng, int outerRepeats = 8, GlobalVertexCutStats* stats = nullptr);

// Built-in oracle backed by rooted_min_vertex_cut.
RootedVertexOracle make_builtin_rooted_oracle(Rational eps, RngStream rng, int repeats);

}  // namespace dicut
