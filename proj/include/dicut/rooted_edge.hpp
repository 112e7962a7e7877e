#pragma once

#include <functional>
#include <vector>

#include "dicut/flow.hpp"
#include "dicut/graph.hpp"
#include "dicut/sampling.hpp"

namespace dicut {

// One batch's sparsifier: the graph obtained from G by merging everything
// outside the core set A_B into the root. Vertices carry local dense ids;
// toG/fromG translate to the input graph.
struct SparsifierBundle {
    WeightedDigraph graph;
    std::vector<int> toG;
    std::vector<int> fromG;
    int ystarLocal = 0;
    int level = 1;
    std::vector<int> batch;
    int batchId = -1;
    int parentId = -1;
    VertexSet coreSet;  // A_B, in G ids
};

// Parent sparsifier plus super-source and penalty edges, all capacities
// multiplied by scale = z * 2nu * q so the fractional penalties become exact
// integers: penalty(v) = p * OPT_hat * outdeg_G(v), source edge = 4 OPT_hat * scale.
struct PenalizedGraph {
    WeightedDigraph graph;
    std::vector<int> toG;  // local -> G id, -1 for the super-source
    int sLocal = 0;
    int ystarLocal = 0;
    std::int64_t scale = 1;
    std::vector<std::pair<int, Weight>> penaltyEdges;  // (local v, scaled capacity)
    std::vector<std::pair<int, Weight>> sourceEdges;   // (local x, scaled capacity)
};

struct CoreSetResult {
    VertexSet coreSet;  // A_B in G ids
    Weight cutValue = 0;  // scaled min s-y* cut value in H
};

PenalizedGraph build_penalized_graph_edge(const SparsifierBundle& parent, const std::vector<int>& batch,
                                          const EstimateContext& ctx, Rational eps,
                                          const WeightedDigraph& g);

// Minimum s-y* cut in H with the sink-side-maximal source side, so that the
// core set keeps every terminal whose connectivity to the root is below
// 4 OPT_hat * scale.
CoreSetResult extract_core_set_edge(const PenalizedGraph& h);

SparsifierBundle contract_beyond(const WeightedDigraph& g, const VertexSet& coreSet, int ystar);

SparsifierBundle approx_sparsify_edge(int level, const std::vector<int>& batch, const EstimateContext& ctx,
                                      Rational eps, const WeightedDigraph& g, int ystar,
                                      const SparsifierBundle* parent);

struct RootedObserver {
    std::function<void(const SparsifierBundle&)> onBundle;
    std::vector<Weight>* trialValues = nullptr;
};

EdgeCut rooted_min_edge_cut(const WeightedDigraph& g, int ystar, Rational eps, RngStream rng, int repeats,
                            const RootedObserver* observer = nullptr);

// Single trial with externally fixed estimates and terminals.
EdgeCut rooted_min_edge_cut_injected(const WeightedDigraph& g, int ystar, Rational eps,
                                     const EstimateContext& ctx, const RootedObserver* observer = nullptr);

// Boosting default: 64 * ceil(log2^2(m * W)) trials.
int default_repeats(std::int64_t m, Weight maxWeight);

}  // namespace dicut
