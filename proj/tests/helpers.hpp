#pragma once

// Test-only oracles and generators. The cut enumerations here are written
// against the definitions alone so they stay independent of the flow engine
// and of the sparsification pipeline they are used to check.

#include <optional>
#include <vector>

#include "dicut/brute.hpp"
#include "dicut/graph.hpp"
#include "dicut/rng.hpp"
#include "dicut/sampling.hpp"

namespace dicut::testing {

// Minimum s-t edge cut value by scanning all bipartitions with s in X, t in Y.
inline Weight brute_st_edge_cut_value(const WeightedDigraph& g, int s, int t) {
    int n = g.vertex_count();
    Weight best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << s)) || (mask & (1u << t))) continue;
        Weight value = 0;
        for (const auto& a : g.arcs())
            if ((mask & (1u << a.tail)) && !(mask & (1u << a.head))) value += a.weight;
        if (best < 0 || value < best) best = value;
    }
    return best;
}

// Minimum s-t vertex cut value over all (L, S, R) with s in L, t in R and no
// L->R edge; returns nullopt when the edge (s, t) exists.
inline std::optional<Weight> brute_st_vertex_cut_value(const WeightedDigraph& g, int s, int t) {
    int n = g.vertex_count();
    for (int e : g.out_arcs(s))
        if (g.arc(e).head == t) return std::nullopt;
    std::vector<unsigned> outMask(static_cast<std::size_t>(n), 0);
    for (const auto& a : g.arcs()) outMask[static_cast<std::size_t>(a.tail)] |= 1u << a.head;
    Weight best = -1;
    for (unsigned lMask = 0; lMask < (1u << n); ++lMask) {
        if (!(lMask & (1u << s)) || (lMask & (1u << t))) continue;
        unsigned reach = 0;
        for (int v = 0; v < n; ++v)
            if (lMask & (1u << v)) reach |= outMask[static_cast<std::size_t>(v)];
        unsigned sMask = reach & ~lMask;
        if (sMask & (1u << t)) continue;  // an L->t edge: t cannot sit in R
        Weight value = 0;
        for (int v = 0; v < n; ++v)
            if (sMask & (1u << v)) value += g.vertex_weight(v);
        if (best < 0 || value < best) best = value;
    }
    return best < 0 ? std::nullopt : std::optional<Weight>(best);
}

inline WeightedDigraph random_edge_graph(int n, int m, Weight maxw, RngStream& rng) {
    std::vector<WeightedDigraph::Arc> arcs;
    for (int e = 0; e < m; ++e) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) v = (v + 1) % n;
        arcs.push_back({u, v, rng.range(1, maxw)});
    }
    return WeightedDigraph::edge_weighted(n, std::move(arcs));
}

inline WeightedDigraph random_vertex_graph(int n, int m, Weight maxw, RngStream& rng) {
    std::vector<WeightedDigraph::Arc> arcs;
    for (int e = 0; e < m; ++e) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) v = (v + 1) % n;
        arcs.push_back({u, v, 1});
    }
    std::vector<Weight> weights(static_cast<std::size_t>(n));
    for (auto& w : weights) w = rng.range(1, maxw);
    return WeightedDigraph::vertex_weighted(n, std::move(arcs), std::move(weights));
}

// Good-event injection: estimates bracketing (OPT, vol+(source side of the
// distinguished cut)) and a terminal set holding its least vertex, padded
// with further eligible vertices so the hierarchy has depth.
inline std::optional<EstimateContext> good_event_injection(const WeightedDigraph& g, int ystar,
                                                           EstimateMode mode) {
    VertexSet sourceSide;
    Weight opt = 0;
    if (mode == EstimateMode::Edge) {
        EdgeCut cut = brute_min_edge_cut(g, ystar);
        sourceSide = cut.x;
        opt = cut.value;
    } else {
        VertexCut cut = brute_min_vertex_cut(g, ystar);
        sourceSide = cut.l;
        opt = cut.value;
    }
    if (opt < 1) return std::nullopt;  // the OPT = 0 shortcut handles these
    std::int64_t vol = out_volume(g, sourceSide);
    if (vol < 1) return std::nullopt;

    Weight optEstimate = Weight{1} << floor_log2(static_cast<std::uint64_t>(opt));
    std::int64_t nu = std::int64_t{1} << floor_log2(static_cast<std::uint64_t>(vol));

    std::vector<char> banned(static_cast<std::size_t>(g.vertex_count()), 0);
    banned[static_cast<std::size_t>(ystar)] = 1;
    if (mode == EstimateMode::Vertex)
        for (int v : g.in_neighbors(ystar)) banned[static_cast<std::size_t>(v)] = 1;

    std::int64_t capacity = 2 * g.arc_count() / nu;
    std::vector<int> terminals{sourceSide.ids().front()};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (static_cast<std::int64_t>(terminals.size()) >= capacity) break;
        if (banned[static_cast<std::size_t>(v)] || v == terminals.front()) continue;
        terminals.push_back(v);
    }
    VertexSet forbidden = VertexSet::from_mask(banned);
    return make_injected_context(g, mode, optEstimate, nu, VertexSet(terminals), forbidden);
}

}  // namespace dicut::testing
