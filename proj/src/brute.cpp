#include "dicut/brute.hpp"

#include <algorithm>

namespace dicut {

namespace {

constexpr int kEdgeCap = 14;
constexpr int kVertexCap = 10;

std::vector<int> mask_to_ids(unsigned mask, int n) {
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) ids.push_back(v);
    return ids;
}

bool ids_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

EdgeCut brute_min_edge_cut(const WeightedDigraph& g, std::optional<int> root) {
    if (g.mode() != WeightMode::EdgeWeighted) fail(Err::BadArgument, "edge kind needs edge weights");
    int n = g.vertex_count();
    if (n > kEdgeCap) fail(Err::TooLarge, "edge enumeration capped at n <= 14");
    if (n < 2) fail(Err::NoFeasible, "no bipartition exists");
    if (root && (*root < 0 || *root >= n)) fail(Err::BadArgument, "root out of range");

    // Per-subset cut values via tail/head membership scan.
    bool haveBest = false;
    Weight bestValue = 0;
    std::vector<int> bestIds;
    unsigned full = (1u << n) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {
        if (root && (mask & (1u << *root))) continue;
        Weight value = 0;
        for (const auto& a : g.arcs())
            if ((mask & (1u << a.tail)) && !(mask & (1u << a.head))) value += a.weight;
        if (!haveBest || value < bestValue) {
            haveBest = true;
            bestValue = value;
            bestIds = mask_to_ids(mask, n);
        } else if (value == bestValue) {
            std::vector<int> ids = mask_to_ids(mask, n);
            if (ids_lex_less(ids, bestIds)) bestIds = std::move(ids);
        }
    }
    if (!haveBest) fail(Err::NoFeasible, "no feasible edge cut");
    VertexSet x(bestIds);
    std::vector<char> comp(static_cast<std::size_t>(n));
    auto inX = x.mask(n);
    for (int v = 0; v < n; ++v) comp[static_cast<std::size_t>(v)] = !inX[static_cast<std::size_t>(v)];
    return EdgeCut{x, VertexSet::from_mask(comp), bestValue};
}

namespace {

// Enumerates vertex-cuts by their L side; for a fixed L the cheapest valid
// completion is S = N+(L), R = the rest, which must be non-empty.
VertexCut brute_vertex_cut_impl(const WeightedDigraph& g, std::optional<int> root, bool preferBalanced) {
    if (g.mode() != WeightMode::VertexWeighted) fail(Err::BadArgument, "vertex kind needs vertex weights");
    int n = g.vertex_count();
    if (n > kVertexCap) fail(Err::TooLarge, "vertex enumeration capped at n <= 10");
    if (root && (*root < 0 || *root >= n)) fail(Err::BadArgument, "root out of range");

    std::vector<unsigned> outMask(static_cast<std::size_t>(n), 0);
    for (const auto& a : g.arcs()) outMask[static_cast<std::size_t>(a.tail)] |= 1u << a.head;

    bool haveBest = false;
    Weight bestValue = 0;
    bool bestBalanced = false;
    unsigned bestL = 0, bestS = 0;
    unsigned full = n == 32 ? ~0u : (1u << n) - 1u;
    for (unsigned lMask = 1; lMask <= full; ++lMask) {
        if (root && (lMask & (1u << *root))) continue;
        unsigned reach = 0;
        for (int v = 0; v < n; ++v)
            if (lMask & (1u << v)) reach |= outMask[static_cast<std::size_t>(v)];
        unsigned sMask = reach & ~lMask;
        unsigned rMask = full & ~(lMask | sMask);
        if (rMask == 0) continue;
        if (root && !(rMask & (1u << *root))) continue;
        Weight value = 0;
        for (int v = 0; v < n; ++v)
            if (sMask & (1u << v)) value += g.vertex_weight(v);
        bool balanced = true;
        if (preferBalanced) {
            Weight wl = 0, wr = 0;
            for (int v = 0; v < n; ++v) {
                if (lMask & (1u << v)) wl += g.vertex_weight(v);
                if (rMask & (1u << v)) wr += g.vertex_weight(v);
            }
            balanced = wl <= wr;
        }
        bool better = false;
        if (!haveBest || value < bestValue) {
            better = true;
        } else if (value == bestValue) {
            if (preferBalanced && balanced != bestBalanced) {
                better = balanced;
            } else {
                better = ids_lex_less(mask_to_ids(lMask, n), mask_to_ids(bestL, n));
            }
        }
        if (better) {
            haveBest = true;
            bestValue = value;
            bestBalanced = balanced;
            bestL = lMask;
            bestS = sMask;
        }
    }
    if (!haveBest) fail(Err::NoFeasible, "no feasible vertex cut");
    unsigned rMask = full & ~(bestL | bestS);
    return VertexCut{VertexSet(mask_to_ids(bestL, n)), VertexSet(mask_to_ids(bestS, n)),
                     VertexSet(mask_to_ids(rMask, n)), bestValue};
}

}  // namespace

VertexCut brute_min_vertex_cut(const WeightedDigraph& g, std::optional<int> root) {
    return brute_vertex_cut_impl(g, root, false);
}

VertexCut brute_global_vertex_cut_balanced(const WeightedDigraph& g) {
    return brute_vertex_cut_impl(g, std::nullopt, true);
}

DistinguishedCut brute_min_cut(const WeightedDigraph& g, BruteKind kind, std::optional<int> root) {
    DistinguishedCut out;
    switch (kind) {
        case BruteKind::EdgeGlobal:
            out.edge = brute_min_edge_cut(g);
            out.value = out.edge->value;
            break;
        case BruteKind::EdgeRooted:
            if (!root) fail(Err::BadArgument, "rooted kind needs a root");
            out.edge = brute_min_edge_cut(g, root);
            out.value = out.edge->value;
            break;
        case BruteKind::VertexGlobal:
            out.vertex = brute_min_vertex_cut(g);
            out.value = out.vertex->value;
            break;
        case BruteKind::VertexRooted:
            if (!root) fail(Err::BadArgument, "rooted kind needs a root");
            out.vertex = brute_min_vertex_cut(g, root);
            out.value = out.vertex->value;
            break;
    }
    return out;
}

}  // namespace dicut
