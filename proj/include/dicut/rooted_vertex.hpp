#pragma once

#include <functional>
#include <vector>

#include "dicut/flow.hpp"
#include "dicut/graph.hpp"
#include "dicut/sampling.hpp"

namespace dicut {

// Vertex-weighted sparsifier: the graph derived from G via the core set A_B.
// eligible caches A_B' = V(G_B) \ ({y*} u N-_{G_B}(y*)), the universe its
// children draw penalty copies from.
struct VertexSparsifierBundle {
    WeightedDigraph graph;
    std::vector<int> toG;
    std::vector<int> fromG;
    int ystarLocal = 0;
    int level = 1;
    std::vector<int> batch;
    int batchId = -1;
    int parentId = -1;
    VertexSet coreSet;   // A_B, in G ids
    VertexSet eligible;  // A_B', in G ids
};

// Parent sparsifier plus super-source, terminal copies x^copy (weight
// 4 OPT_hat, same out-neighbours as x) and penalty copies v^vcopy (weight
// p * OPT_hat * outdeg_G(v) after scaling) wired v -> v^vcopy -> y*.
struct VertexPenalizedGraph {
    WeightedDigraph graph;  // vertex weights scaled by scale = z * 2nu * q
    int sLocal = 0;
    int ystarLocal = 0;
    std::int64_t scale = 1;
    std::vector<int> toParentLocal;  // H local -> parent local; -1 for s
    std::vector<int> toG;            // H local -> G id; -1 for s and copies
    std::vector<int> tcopyOf;        // parent local -> x^copy H id or -1
    std::vector<int> vcopyOf;        // parent local -> v^vcopy H id or -1
    std::vector<char> isTerminalCopy;  // per H local
    std::vector<char> isPenaltyCopy;   // per H local
    VertexSet completeUniverse;  // A_B'^complete, H local ids
};

VertexPenalizedGraph build_penalized_graph_vertex(const VertexSparsifierBundle& parent,
                                                  const std::vector<int>& batch, const EstimateContext& ctx,
                                                  Rational eps, const WeightedDigraph& g);

// Lhat together with the matching originals/copies of its terminals.
VertexSet complete_set(const VertexSet& lhat, const VertexPenalizedGraph& h);

struct VertexCoreSetResult {
    VertexSet coreSet;   // A_B in G ids
    Weight cutValue = 0; // scaled min s-y* vertex-cut value in H
};

VertexCoreSetResult extract_core_set_vertex(const VertexPenalizedGraph& h);

// Graph derived from G via A_B: keeps A_B's out-edges, funnels every
// out-neighbour into the root with one edge each.
VertexSparsifierBundle derive_graph(const WeightedDigraph& g, const VertexSet& coreSet, int ystar);

VertexSparsifierBundle approx_sparsify_vertex(int level, const std::vector<int>& batch,
                                              const EstimateContext& ctx, Rational eps,
                                              const WeightedDigraph& g, int ystar,
                                              const VertexSparsifierBundle* parent);

struct RootedVertexObserver {
    std::function<void(const VertexSparsifierBundle&)> onBundle;
    std::vector<Weight>* trialValues = nullptr;
};

VertexCut rooted_min_vertex_cut(const WeightedDigraph& g, int ystar, Rational eps, RngStream rng,
                                int repeats, const RootedVertexObserver* observer = nullptr);

VertexCut rooted_min_vertex_cut_injected(const WeightedDigraph& g, int ystar, Rational eps,
                                         const EstimateContext& ctx,
                                         const RootedVertexObserver* observer = nullptr);

}  // namespace dicut
