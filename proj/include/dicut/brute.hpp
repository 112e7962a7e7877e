#pragma once

#include <optional>

#include "dicut/graph.hpp"

namespace dicut {

enum class BruteKind { EdgeGlobal, EdgeRooted, VertexGlobal, VertexRooted };

// Exhaustive reference solvers. Ties are broken by the lexicographically
// least source side (sorted id lists), so the "distinguished cut" used by
// tests is unique and reproducible.
struct DistinguishedCut {
    std::optional<EdgeCut> edge;
    std::optional<VertexCut> vertex;
    Weight value = 0;
};

// Global kind when root is absent. Caps: n <= 14 for edge kinds, n <= 10 for
// vertex kinds (TooLarge beyond).
EdgeCut brute_min_edge_cut(const WeightedDigraph& g, std::optional<int> root = std::nullopt);
VertexCut brute_min_vertex_cut(const WeightedDigraph& g, std::optional<int> root = std::nullopt);

DistinguishedCut brute_min_cut(const WeightedDigraph& g, BruteKind kind,
                               std::optional<int> root = std::nullopt);

// Analysis variant for the global->rooted reduction: among optimal global
// vertex-cuts, prefer one with w(L) <= w(R) when it exists, then least L.
VertexCut brute_global_vertex_cut_balanced(const WeightedDigraph& g);

}  // namespace dicut
