#pragma once

#include <vector>

#include "dicut/graph.hpp"
#include "dicut/rng.hpp"

namespace dicut {

struct TerminalSet {
    VertexSet terminals;
    std::int64_t nu = 1;
    VertexSet forbidden;
};

// Guessed (or injected) per-trial parameters. optEstimate and volEstimate are
// powers of two; z = ceil(log2 |T|) once terminals are known.
struct EstimateContext {
    Weight optEstimate = 1;
    std::int64_t volEstimate = 1;
    int z = 0;
    TerminalSet terminals;
    bool injected = false;
};

struct BatchHierarchy {
    // levels[i] is the ordered level-i partition of the terminal list;
    // parent[i][j] indexes levels[i-1].
    std::vector<std::vector<std::vector<int>>> levels;
    std::vector<std::vector<int>> parent;
    int z = 0;
};

// Samples floor(2m/nu) edges uniformly with repetition; terminals are the
// sampled tails outside F. Retries up to 16 times on an empty draw, then
// falls back to the least non-forbidden vertex of positive out-degree.
TerminalSet pick_terminals(const WeightedDigraph& g, std::int64_t nu, const VertexSet& forbidden,
                           RngStream& rng);

enum class EstimateMode { Edge, Vertex };

// optEstimate uniform over powers of two in [1, mW] (edge) or [1, nW]
// (vertex); volEstimate uniform over powers of two in [1, m].
EstimateContext guess_estimates(EstimateMode mode, const WeightedDigraph& g, RngStream& rng);

BatchHierarchy build_batch_hierarchy(const TerminalSet& terminals);

// Validated externally-supplied context; lets tests force the good event.
EstimateContext make_injected_context(const WeightedDigraph& g, EstimateMode mode, Weight optEstimate,
                                      std::int64_t volEstimate, const VertexSet& terminals,
                                      const VertexSet& forbidden);

}  // namespace dicut
