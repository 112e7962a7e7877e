#include "dicut/global_cut.hpp"

#include <algorithm>
#include <memory>

#include "dicut/rooted_edge.hpp"

namespace dicut {

VertexSet forward_far_set(const WeightedDigraph& g, int v) {
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    blocked[static_cast<std::size_t>(v)] = 1;
    for (int e : g.out_arcs(v)) blocked[static_cast<std::size_t>(g.arc(e).head)] = 1;
    std::vector<int> ids;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!blocked[static_cast<std::size_t>(u)]) ids.push_back(u);
    return VertexSet(std::move(ids));
}

VertexSet backward_far_set(const WeightedDigraph& g, int v) {
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    blocked[static_cast<std::size_t>(v)] = 1;
    for (int e : g.in_arcs(v)) blocked[static_cast<std::size_t>(g.arc(e).tail)] = 1;
    std::vector<int> ids;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (!blocked[static_cast<std::size_t>(u)]) ids.push_back(u);
    return VertexSet(std::move(ids));
}

std::int64_t far_backward_out_volume(const WeightedDigraph& g, int y) {
    std::int64_t total = g.arc_count();
    total -= g.out_degree(y);
    for (int v : g.in_neighbors(y))
        if (v != y) total -= g.out_degree(v);
    return total;
}

RootSamplingParams compute_root_sampling_params(const WeightedDigraph& g) {
    if (g.mode() != WeightMode::VertexWeighted)
        fail(Err::BadArgument, "root sampling needs vertex weights");
    int n = g.vertex_count();
    RootSamplingParams params;
    params.farForwardWeight.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        // w(F+(v)) = w(V) - sum of weights over {v} u N+(v)
        Weight w = g.total_weight() - g.vertex_weight(v);
        for (int u : g.out_neighbors(v))
            if (u != v) w -= g.vertex_weight(u);
        params.farForwardWeight[static_cast<std::size_t>(v)] = w;
        params.wstar = std::max(params.wstar, w);
    }
    if (params.wstar == 0) fail(Err::CompleteGraph, "every forward far-away set is empty");
    params.perVertexProb.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Weight num = 2 * g.vertex_weight(v);
        params.perVertexProb[static_cast<std::size_t>(v)] =
            num >= params.wstar ? Rational(1, 1) : Rational(num, params.wstar);
    }
    return params;
}

VertexSet sample_roots(const WeightedDigraph& g, RngStream& rng) {
    RootSamplingParams params = compute_root_sampling_params(g);
    return sample_roots(g, params, rng);
}

VertexSet sample_roots(const WeightedDigraph& g, const RootSamplingParams& params, RngStream& rng) {
    int n = g.vertex_count();
    std::vector<int> chosen;
    for (int y = 0; y < n; ++y) {
        Weight num = 2 * g.vertex_weight(y);
        if (!rng.bernoulli_num_den(static_cast<std::uint64_t>(num),
                                   static_cast<std::uint64_t>(params.wstar)))
            continue;
        // drop roots with F-(y) empty: they admit no feasible rooted cut
        if (static_cast<std::int64_t>(n) - 1 - static_cast<std::int64_t>(g.in_neighbors(y).size()) <= 0)
            continue;
        chosen.push_back(y);
    }
    return apply_markov_trim(g, VertexSet(std::move(chosen)));
}

VertexSet apply_markov_trim(const WeightedDigraph& g, VertexSet roots) {
    std::int64_t totalVolume = 0;
    for (int y : roots.ids()) totalVolume += far_backward_out_volume(g, y);
    if (totalVolume > 8 * static_cast<std::int64_t>(g.arc_count())) return VertexSet();
    return roots;
}

WeightedDigraph build_root_sparsifier(const WeightedDigraph& g, int y) {
    VertexSet far = backward_far_set(g, y);
    if (far.empty()) fail(Err::EmptyFarSet, "root has no backward far-away set");
    std::vector<char> inFar = far.mask(g.vertex_count());
    std::vector<WeightedDigraph::Arc> arcs;
    for (int e : g.in_arcs(y)) arcs.push_back(g.arc(e));
    for (const auto& a : g.arcs())
        if (inFar[static_cast<std::size_t>(a.tail)]) arcs.push_back(a);
    return WeightedDigraph::vertex_weighted(g.vertex_count(), std::move(arcs), g.vertex_weights(),
                                            g.zero_weights_allowed());
}

ReductionBudget make_reduction_budget(const WeightedDigraph& g) {
    ReductionBudget budget;
    std::int64_t m = g.arc_count();
    std::int64_t n = g.vertex_count();
    budget.maxQueries = n >= 2 ? (9 * m + n - 2) / (n - 1) : 0;
    budget.maxTotalQueryEdges = 9 * m;
    return budget;
}

EdgeCut global_min_edge_cut(const WeightedDigraph& g, Rational eps, RngStream rng, int repeats) {
    if (g.mode() != WeightMode::EdgeWeighted) fail(Err::BadArgument, "global edge cut needs edge weights");
    if (g.vertex_count() < 2) fail(Err::TooSmall, "need at least two vertices");
    const int root = 0;
    EdgeCut direct = rooted_min_edge_cut(g, root, eps, rng.derive(1), repeats);
    EdgeCut reversedCut = rooted_min_edge_cut(reverse(g), root, eps, rng.derive(2), repeats);
    // (X', Y') in G is (Y_rev, X_rev); the crossing weight carries over.
    EdgeCut translated{reversedCut.y, reversedCut.x, reversedCut.value};
    return translated.value < direct.value ? translated : direct;
}

namespace {

// Step-4 fallback: ({v}, N+(v), F+(v)) for the vertex maximising w(F+(v)).
VertexCut any_vertex_cut(const WeightedDigraph& g, const RootSamplingParams& params) {
    int best = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (params.farForwardWeight[static_cast<std::size_t>(v)] >
            params.farForwardWeight[static_cast<std::size_t>(best)])
            best = v;
    VertexSet l({best});
    VertexSet s(g.out_neighbors(best));
    VertexSet r = forward_far_set(g, best);
    Weight value = 0;
    for (int v : s.ids()) value += g.vertex_weight(v);
    return VertexCut{l, s, r, value};
}

struct HalfRunResult {
    VertexCut cut;
    std::int64_t queries = 0;
    std::int64_t queryEdges = 0;
    bool withinBudget = true;
};

// One AlgGlobalVertexCut pass on `h` (either G or its reverse).
HalfRunResult alg_global_vertex_cut(const WeightedDigraph& h, const RootedVertexOracle& oracle,
                                    RngStream rng) {
    HalfRunResult result;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (h.out_degree(v) == 0) {
            std::vector<int> rest;
            for (int u = 0; u < h.vertex_count(); ++u)
                if (u != v) rest.push_back(u);
            result.cut = VertexCut{VertexSet({v}), VertexSet(), VertexSet(std::move(rest)), 0};
            return result;
        }
    }

    RootSamplingParams params = compute_root_sampling_params(h);
    ReductionBudget budget = make_reduction_budget(h);
    VertexSet roots = sample_roots(h, params, rng);
    if (roots.empty()) {
        result.cut = any_vertex_cut(h, params);
        return result;
    }

    bool have = false;
    VertexCut best;
    for (int y : roots.ids()) {
        WeightedDigraph gy = build_root_sparsifier(h, y);
        budget.queries += 1;
        budget.queryEdges += gy.arc_count();
        if (budget.queries > budget.maxQueries || budget.queryEdges > budget.maxTotalQueryEdges) {
            result.withinBudget = false;
            break;  // Appendix-D early termination
        }
        VertexCut cut = oracle(gy, y);
        bool feasible = true;
        try {
            validate_vertex_cut(h, cut);
            if (!cut.r.contains(y)) feasible = false;
        } catch (const Error&) {
            feasible = false;
        }
        if (!feasible) continue;
        if (!have || cut.value < best.value) {
            have = true;
            best = cut;
        }
    }
    result.queries = budget.queries;
    result.queryEdges = budget.queryEdges;
    if (!result.withinBudget || !have) {
        result.cut = any_vertex_cut(h, params);
        return result;
    }
    result.cut = best;
    return result;
}

}  // namespace

VertexCut global_min_vertex_cut(const WeightedDigraph& g, Rational eps, const RootedVertexOracle& oracle,
                                RngStream rng, int outerRepeats, GlobalVertexCutStats* stats) {
    if (g.mode() != WeightMode::VertexWeighted)
        fail(Err::BadArgument, "global vertex cut needs vertex weights");
    if (eps.num < 0) fail(Err::BadArgument, "eps must be non-negative");
    if (outerRepeats < 1) fail(Err::BadArgument, "outer repetitions must be positive");

    // A vertex-cut exists iff some ordered pair has no edge.
    bool hasCut = false;
    int n = g.vertex_count();
    for (int v = 0; v < n && !hasCut; ++v)
        if (static_cast<int>(g.out_neighbors(v).size()) < n - 1) hasCut = true;
    if (!hasCut) fail(Err::CompleteGraph, "input is a complete graph");

    WeightedDigraph rev = reverse(g);
    bool have = false;
    VertexCut best;
    for (int rep = 0; rep < outerRepeats; ++rep) {
        RngStream repRng = rng.derive(static_cast<std::uint64_t>(rep));
        HalfRunResult forward = alg_global_vertex_cut(g, oracle, repRng.derive(0));
        HalfRunResult backward = alg_global_vertex_cut(rev, oracle, repRng.derive(1));
        VertexCut translated{backward.cut.r, backward.cut.s, backward.cut.l, backward.cut.value};
        for (const HalfRunResult* half : {&forward, &backward}) {
            if (stats) {
                stats->runQueries.push_back(half->queries);
                stats->runQueryEdges.push_back(half->queryEdges);
                if (!half->withinBudget) ++stats->discardedRuns;
            }
        }
        for (const VertexCut* cand : {&forward.cut, &translated}) {
            validate_vertex_cut(g, *cand);
            if (stats) stats->runValues.push_back(cand->value);
            if (!have || cand->value < best.value) {
                have = true;
                best = *cand;
            }
        }
    }
    return best;
}

RootedVertexOracle make_builtin_rooted_oracle(Rational eps, RngStream rng, int repeats) {
    if (eps.num <= 0) fail(Err::BadArgument, "builtin oracle needs eps > 0; plug an exact oracle for eps = 0");
    auto counter = std::make_shared<std::uint64_t>(0);
    return [eps, rng, repeats, counter](const WeightedDigraph& gy, int root) {
        RngStream callRng = rng.derive(++*counter);
        return rooted_min_vertex_cut(gy, root, eps, callRng, repeats);
    };
}

}  // namespace dicut
