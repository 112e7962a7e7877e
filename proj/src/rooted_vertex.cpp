#include "dicut/rooted_vertex.hpp"

#include <algorithm>

#include "dicut/rooted_edge.hpp"
#include "dicut/weight_transform.hpp"

namespace dicut {

namespace {

constexpr Weight kMaxCapacity = std::int64_t{1} << 62;
constexpr Weight kDirectWeightLimit = Weight{1} << 20;

Weight checked_cap(Wide value) {
    if (value < 0 || value > static_cast<Wide>(kMaxCapacity))
        fail(Err::WeightOutOfRange, "scaled weight exceeds the supported range");
    return static_cast<Weight>(value);
}

VertexSet eligible_set(const WeightedDigraph& g, int ystar, const std::vector<int>& toG) {
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    blocked[static_cast<std::size_t>(ystar)] = 1;
    for (int e : g.in_arcs(ystar)) blocked[static_cast<std::size_t>(g.arc(e).tail)] = 1;
    std::vector<int> ids;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!blocked[static_cast<std::size_t>(v)]) ids.push_back(toG[static_cast<std::size_t>(v)]);
    return VertexSet(std::move(ids));
}

VertexSparsifierBundle whole_graph_bundle(const WeightedDigraph& g, int ystar,
                                          const std::vector<int>& batch) {
    VertexSparsifierBundle b;
    b.graph = g;
    b.toG.resize(static_cast<std::size_t>(g.vertex_count()));
    b.fromG.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        b.toG[static_cast<std::size_t>(v)] = v;
        b.fromG[static_cast<std::size_t>(v)] = v;
    }
    b.ystarLocal = ystar;
    b.level = 1;
    b.batch = batch;
    b.eligible = eligible_set(g, ystar, b.toG);
    b.coreSet = b.eligible;
    return b;
}

}  // namespace

VertexPenalizedGraph build_penalized_graph_vertex(const VertexSparsifierBundle& parent,
                                                  const std::vector<int>& batch, const EstimateContext& ctx,
                                                  Rational eps, const WeightedDigraph& g) {
    if (eps.num <= 0 || eps.num >= eps.den) fail(Err::BadArgument, "eps must lie in (0,1)");
    if (ctx.z < 1) fail(Err::BadArgument, "penalized graph needs z >= 1");

    const WeightedDigraph& pg = parent.graph;
    int parentN = pg.vertex_count();

    VertexPenalizedGraph h;
    h.ystarLocal = parent.ystarLocal;
    h.scale = checked_cap(static_cast<Wide>(ctx.z) * 2 * ctx.volEstimate * eps.den);
    h.tcopyOf.assign(static_cast<std::size_t>(parentN), -1);
    h.vcopyOf.assign(static_cast<std::size_t>(parentN), -1);

    std::vector<char> eligibleLocal(static_cast<std::size_t>(parentN), 0);
    for (int v : parent.eligible.ids()) {
        int local = parent.fromG[static_cast<std::size_t>(v)];
        if (local >= 0) eligibleLocal[static_cast<std::size_t>(local)] = 1;
    }
    std::vector<char> inBatch(static_cast<std::size_t>(parentN), 0);
    for (int x : batch) {
        int local = parent.fromG[static_cast<std::size_t>(x)];
        if (local >= 0 && eligibleLocal[static_cast<std::size_t>(local)])
            inBatch[static_cast<std::size_t>(local)] = 1;
    }

    std::vector<Weight> weights;
    std::vector<int> toParent, toG;
    for (int v = 0; v < parentN; ++v) {
        weights.push_back(checked_cap(static_cast<Wide>(pg.vertex_weight(v)) * h.scale));
        toParent.push_back(v);
        toG.push_back(parent.toG[static_cast<std::size_t>(v)]);
    }
    Weight terminalCopyWeight = checked_cap(static_cast<Wide>(4) * ctx.optEstimate * h.scale);
    for (int v = 0; v < parentN; ++v) {
        if (!inBatch[static_cast<std::size_t>(v)]) continue;
        h.tcopyOf[static_cast<std::size_t>(v)] = static_cast<int>(weights.size());
        weights.push_back(terminalCopyWeight);
        toParent.push_back(v);
        toG.push_back(-1);
    }
    for (int v = 0; v < parentN; ++v) {
        if (!eligibleLocal[static_cast<std::size_t>(v)]) continue;
        int orig = parent.toG[static_cast<std::size_t>(v)];
        h.vcopyOf[static_cast<std::size_t>(v)] = static_cast<int>(weights.size());
        weights.push_back(checked_cap(static_cast<Wide>(eps.num) * ctx.optEstimate * g.out_degree(orig)));
        toParent.push_back(v);
        toG.push_back(-1);
    }
    h.sLocal = static_cast<int>(weights.size());
    weights.push_back(1);
    toParent.push_back(-1);
    toG.push_back(-1);

    int hN = static_cast<int>(weights.size());
    h.isTerminalCopy.assign(static_cast<std::size_t>(hN), 0);
    h.isPenaltyCopy.assign(static_cast<std::size_t>(hN), 0);
    for (int v = 0; v < parentN; ++v) {
        if (h.tcopyOf[static_cast<std::size_t>(v)] >= 0)
            h.isTerminalCopy[static_cast<std::size_t>(h.tcopyOf[static_cast<std::size_t>(v)])] = 1;
        if (h.vcopyOf[static_cast<std::size_t>(v)] >= 0)
            h.isPenaltyCopy[static_cast<std::size_t>(h.vcopyOf[static_cast<std::size_t>(v)])] = 1;
    }

    std::vector<WeightedDigraph::Arc> arcs;
    for (const auto& a : pg.arcs()) arcs.push_back({a.tail, a.head, 1});
    for (int v = 0; v < parentN; ++v) {
        int tcopy = h.tcopyOf[static_cast<std::size_t>(v)];
        int vcopy = h.vcopyOf[static_cast<std::size_t>(v)];
        if (vcopy >= 0) {
            arcs.push_back({v, vcopy, 1});
            arcs.push_back({vcopy, h.ystarLocal, 1});
        }
        if (tcopy >= 0) {
            arcs.push_back({h.sLocal, tcopy, 1});
            for (int u : pg.out_neighbors(v)) arcs.push_back({tcopy, u, 1});
            arcs.push_back({tcopy, vcopy, 1});  // v in B => v also has a penalty copy
        }
    }

    h.graph = WeightedDigraph::vertex_weighted(hN, std::move(arcs), std::move(weights),
                                               /*allowZeroWeights=*/true);
    h.toParentLocal = std::move(toParent);
    h.toG = std::move(toG);

    std::vector<int> universe;
    for (int v = 0; v < parentN; ++v) {
        if (eligibleLocal[static_cast<std::size_t>(v)]) universe.push_back(v);
        if (h.tcopyOf[static_cast<std::size_t>(v)] >= 0)
            universe.push_back(h.tcopyOf[static_cast<std::size_t>(v)]);
    }
    h.completeUniverse = VertexSet(std::move(universe));
    return h;
}

VertexSet complete_set(const VertexSet& lhat, const VertexPenalizedGraph& h) {
    std::vector<int> out;
    for (int v : lhat.ids()) {
        if (!h.completeUniverse.contains(v)) fail(Err::OutOfUniverse, "vertex outside A_B'^complete");
        out.push_back(v);
        if (h.isTerminalCopy[static_cast<std::size_t>(v)]) {
            out.push_back(h.toParentLocal[static_cast<std::size_t>(v)]);
        } else {
            int tcopy = h.tcopyOf[static_cast<std::size_t>(v)];
            if (tcopy >= 0) out.push_back(tcopy);
        }
    }
    return VertexSet(std::move(out));
}

VertexCoreSetResult extract_core_set_vertex(const VertexPenalizedGraph& h) {
    VertexFlowResult flow = min_st_vertex_cut(h.graph, h.sLocal, h.ystarLocal, /*wantMaximalSide=*/true);
    std::vector<int> lhat;
    for (int v : flow.sourceSideMaximal.ids())
        if (v != h.sLocal) lhat.push_back(v);
    VertexSet completed = complete_set(VertexSet(std::move(lhat)), h);
    std::vector<int> core;
    for (int v : completed.ids()) {
        if (h.isTerminalCopy[static_cast<std::size_t>(v)]) continue;
        core.push_back(h.toG[static_cast<std::size_t>(v)]);
    }
    return VertexCoreSetResult{VertexSet(std::move(core)), flow.maxFlowValue};
}

VertexSparsifierBundle derive_graph(const WeightedDigraph& g, const VertexSet& coreSet, int ystar) {
    if (coreSet.contains(ystar)) fail(Err::BadArgument, "core set may not contain the root");
    for (int e : g.in_arcs(ystar))
        if (coreSet.contains(g.arc(e).tail))
            fail(Err::BadArgument, "core set intersects the root's in-neighbourhood");

    VertexSparsifierBundle b;
    int n = g.vertex_count();
    b.fromG.assign(static_cast<std::size_t>(n), -1);
    auto addVertex = [&](int v) {
        b.fromG[static_cast<std::size_t>(v)] = static_cast<int>(b.toG.size());
        b.toG.push_back(v);
    };
    for (int v : coreSet.ids()) addVertex(v);
    std::vector<int> boundary = out_neighbor_set(g, coreSet);
    for (int v : boundary) addVertex(v);
    b.ystarLocal = static_cast<int>(b.toG.size());
    b.toG.push_back(ystar);
    b.fromG[static_cast<std::size_t>(ystar)] = b.ystarLocal;

    std::vector<WeightedDigraph::Arc> arcs;
    for (int v : coreSet.ids()) {
        int local = b.fromG[static_cast<std::size_t>(v)];
        for (int e : g.out_arcs(v))
            arcs.push_back({local, b.fromG[static_cast<std::size_t>(g.arc(e).head)], 1});
    }
    for (int v : boundary) arcs.push_back({b.fromG[static_cast<std::size_t>(v)], b.ystarLocal, 1});

    std::vector<Weight> weights(b.toG.size());
    for (std::size_t i = 0; i < b.toG.size(); ++i)
        weights[i] = g.vertex_weight(b.toG[i]);
    b.graph = WeightedDigraph::vertex_weighted(static_cast<int>(b.toG.size()), std::move(arcs),
                                               std::move(weights), g.zero_weights_allowed());
    b.coreSet = coreSet;
    b.eligible = coreSet;  // N-_{G_B}(y*) is exactly the boundary
    return b;
}

VertexSparsifierBundle approx_sparsify_vertex(int level, const std::vector<int>& batch,
                                              const EstimateContext& ctx, Rational eps,
                                              const WeightedDigraph& g, int ystar,
                                              const VertexSparsifierBundle* parent) {
    if (level <= 1) {
        VertexSparsifierBundle b = whole_graph_bundle(g, ystar, batch);
        b.level = level;
        return b;
    }
    if (!parent) fail(Err::MissingParent, "levels above 1 need the parent bundle");
    VertexPenalizedGraph h = build_penalized_graph_vertex(*parent, batch, ctx, eps, g);
    VertexCoreSetResult core = extract_core_set_vertex(h);
    VertexSparsifierBundle b = derive_graph(g, core.coreSet, ystar);
    b.level = level;
    b.batch = batch;
    return b;
}

namespace {

VertexSet far_backward(const WeightedDigraph& g, int ystar) {
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    blocked[static_cast<std::size_t>(ystar)] = 1;
    for (int e : g.in_arcs(ystar)) blocked[static_cast<std::size_t>(g.arc(e).tail)] = 1;
    std::vector<int> ids;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!blocked[static_cast<std::size_t>(v)]) ids.push_back(v);
    return VertexSet(std::move(ids));
}

VertexCut fallback_cut(const WeightedDigraph& g, int ystar, const VertexSet& farSet) {
    VertexSet s(g.in_neighbors(ystar));
    Weight value = 0;
    for (int v : s.ids()) value += g.vertex_weight(v);
    return VertexCut{farSet, s, VertexSet({ystar}), value};
}

VertexCut run_trial_vertex(const WeightedDigraph& g, int ystar, Rational eps, const EstimateContext& ctx,
                           const RootedVertexObserver* observer) {
    BatchHierarchy hier = build_batch_hierarchy(ctx.terminals);
    int z = hier.z;
    const auto& terminalIds = ctx.terminals.terminals.ids();

    if (z == 0) return min_st_vertex_cut(g, terminalIds[0], ystar, false).cut;

    std::vector<VertexSparsifierBundle> prev;
    for (int i = 1; i <= z; ++i) {
        const auto& batches = hier.levels[static_cast<std::size_t>(i)];
        std::vector<VertexSparsifierBundle> cur;
        cur.reserve(batches.size());
        for (std::size_t j = 0; j < batches.size(); ++j) {
            const VertexSparsifierBundle* par =
                i == 1 ? nullptr : &prev[static_cast<std::size_t>(hier.parent[static_cast<std::size_t>(i)][j])];
            cur.push_back(approx_sparsify_vertex(i, batches[j], ctx, eps, g, ystar, par));
            cur.back().batchId = static_cast<int>(j);
            cur.back().parentId = hier.parent[static_cast<std::size_t>(i)][j];
            if (observer && observer->onBundle) observer->onBundle(cur.back());
        }
        prev = std::move(cur);
    }

    int bestTerminal = -1;
    Weight bestKappa = 0;
    for (std::size_t j = 0; j < prev.size(); ++j) {
        const VertexSparsifierBundle& bundle = prev[j];
        int x = bundle.batch[0];
        int local = bundle.fromG[static_cast<std::size_t>(x)];
        if (local < 0) continue;
        if (!bundle.eligible.contains(x)) continue;  // edge (x, y*) in G_B: kappa undefined
        Weight kappa = min_st_vertex_cut(bundle.graph, local, bundle.ystarLocal, false).maxFlowValue;
        if (bestTerminal < 0 || kappa < bestKappa) {
            bestTerminal = x;
            bestKappa = kappa;
        }
    }
    if (bestTerminal < 0) return fallback_cut(g, ystar, far_backward(g, ystar));
    return min_st_vertex_cut(g, bestTerminal, ystar, false).cut;
}

VertexCut rooted_min_vertex_cut_direct(const WeightedDigraph& g, int ystar, Rational eps, RngStream rng,
                                       int repeats, const RootedVertexObserver* observer) {
    VertexSet farSet = far_backward(g, ystar);
    if (farSet.empty()) fail(Err::NoFeasibleCut, "every vertex neighbours the root");

    // OPT = 0 shortcut.
    std::vector<char> reach = reaches_to(g, ystar);
    bool all = true;
    for (char c : reach) all = all && c;
    if (!all) {
        std::vector<char> comp(reach.size());
        for (std::size_t v = 0; v < reach.size(); ++v) comp[v] = !reach[v];
        VertexCut cut{VertexSet::from_mask(comp), VertexSet(), VertexSet::from_mask(reach), 0};
        if (observer && observer->trialValues) observer->trialValues->push_back(0);
        return cut;
    }

    std::vector<int> forbiddenIds = g.in_neighbors(ystar);
    forbiddenIds.push_back(ystar);
    VertexSet forbidden(std::move(forbiddenIds));

    bool have = false;
    VertexCut best;
    for (int t = 0; t < repeats; ++t) {
        RngStream trialRng = rng.derive(static_cast<std::uint64_t>(t));
        EstimateContext ctx = guess_estimates(EstimateMode::Vertex, g, trialRng);
        ctx.terminals = pick_terminals(g, ctx.volEstimate, forbidden, trialRng);
        ctx.z = static_cast<int>(ceil_log2(ctx.terminals.terminals.ids().size()));
        VertexCut cut = run_trial_vertex(g, ystar, eps, ctx, observer);
        if (observer && observer->trialValues) observer->trialValues->push_back(cut.value);
        if (!have || cut.value < best.value) {
            have = true;
            best = cut;
        }
    }
    if (!have) return fallback_cut(g, ystar, farSet);
    return best;
}

}  // namespace

VertexCut rooted_min_vertex_cut_injected(const WeightedDigraph& g, int ystar, Rational eps,
                                         const EstimateContext& ctx,
                                         const RootedVertexObserver* observer) {
    if (ystar < 0 || ystar >= g.vertex_count()) fail(Err::BadArgument, "root out of range");
    VertexSet farSet = far_backward(g, ystar);
    if (farSet.empty()) fail(Err::NoFeasibleCut, "every vertex neighbours the root");
    std::vector<char> reach = reaches_to(g, ystar);
    bool all = true;
    for (char c : reach) all = all && c;
    if (!all) {
        std::vector<char> comp(reach.size());
        for (std::size_t v = 0; v < reach.size(); ++v) comp[v] = !reach[v];
        return VertexCut{VertexSet::from_mask(comp), VertexSet(), VertexSet::from_mask(reach), 0};
    }
    VertexCut cut = run_trial_vertex(g, ystar, eps, ctx, observer);
    if (observer && observer->trialValues) observer->trialValues->push_back(cut.value);
    return cut;
}

VertexCut rooted_min_vertex_cut(const WeightedDigraph& g, int ystar, Rational eps, RngStream rng,
                                int repeats, const RootedVertexObserver* observer) {
    if (g.mode() != WeightMode::VertexWeighted)
        fail(Err::BadArgument, "rooted vertex cut needs vertex weights");
    if (ystar < 0 || ystar >= g.vertex_count()) fail(Err::BadArgument, "root out of range");
    if (eps.num <= 0 || eps.num >= eps.den) fail(Err::BadArgument, "eps must lie in (0,1)");
    if (repeats < 1) fail(Err::BadArgument, "repeats must be positive");

    if (g.max_weight() <= kDirectWeightLimit)
        return rooted_min_vertex_cut_direct(g, ystar, eps, rng, repeats, observer);

    Rational half(eps.num, eps.den * 2);
    std::vector<Weight> weights = g.vertex_weights();
    auto solveFamily = [&](int i, const std::vector<Weight>& wi, Weight wPrime) {
        WeightedDigraph gi = WeightedDigraph::vertex_weighted(g.vertex_count(), g.arcs(), wi,
                                                              /*allowZeroWeights=*/true);
        int innerRepeats = std::min(repeats, default_repeats(gi.arc_count(), wPrime));
        return rooted_min_vertex_cut_direct(gi, ystar, half,
                                            rng.derive(1000 + static_cast<std::uint64_t>(i)),
                                            innerRepeats, nullptr);
    };
    auto elements = [](const VertexCut& cut) { return cut.s.ids(); };
    auto outcome = solve_with_rescale<VertexCut>(weights, g.max_weight(), half, solveFamily, elements);
    VertexCut best = outcome.best;
    best.value = outcome.value;
    if (observer && observer->trialValues) observer->trialValues->push_back(best.value);
    return best;
}

}  // namespace dicut
