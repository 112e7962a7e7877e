#include "dicut/flow.hpp"

#include <algorithm>
#include <limits>

namespace dicut {

Dinic::Dinic(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {}

int Dinic::add_edge(int u, int v, Weight cap) {
    int id = static_cast<int>(adj_[static_cast<std::size_t>(u)].size());
    adj_[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(adj_[static_cast<std::size_t>(v)].size()), cap});
    adj_[static_cast<std::size_t>(v)].push_back({u, id, 0});
    return id;
}

bool Dinic::bfs(Weight threshold) {
    level_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n_));
    queue.push_back(s_);
    level_[static_cast<std::size_t>(s_)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (const HalfEdge& e : adj_[static_cast<std::size_t>(v)]) {
            if (e.cap >= threshold && level_[static_cast<std::size_t>(e.to)] < 0) {
                level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(v)] + 1;
                queue.push_back(e.to);
            }
        }
    }
    return level_[static_cast<std::size_t>(t_)] >= 0;
}

Weight Dinic::dfs(int v, Weight limit, Weight threshold) {
    if (v == t_) return limit;
    Weight pushed = 0;
    for (int& i = iter_[static_cast<std::size_t>(v)]; i < static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); ++i) {
        HalfEdge& e = adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
        if (e.cap < threshold || level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(v)] + 1)
            continue;
        Weight got = dfs(e.to, std::min(limit - pushed, e.cap), threshold);
        if (got == 0) continue;
        e.cap -= got;
        adj_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += got;
        pushed += got;
        if (pushed == limit) return pushed;
    }
    level_[static_cast<std::size_t>(v)] = -1;
    return pushed;
}

Weight Dinic::max_flow(int s, int t) {
    s_ = s;
    t_ = t;
    Weight maxCap = 0;
    for (const auto& edges : adj_)
        for (const HalfEdge& e : edges) maxCap = std::max(maxCap, e.cap);
    Weight threshold = 1;
    while (threshold <= maxCap / 2) threshold <<= 1;
    Weight total = 0;
    const Weight inf = std::numeric_limits<Weight>::max();
    for (; threshold >= 1; threshold >>= 1) {
        while (bfs(threshold)) {
            iter_.assign(static_cast<std::size_t>(n_), 0);
            while (Weight got = dfs(s_, inf, threshold)) total += got;
        }
    }
    return total;
}

std::vector<char> Dinic::min_source_side() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{s_};
    seen[static_cast<std::size_t>(s_)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const HalfEdge& e : adj_[static_cast<std::size_t>(v)])
            if (e.cap > 0 && !seen[static_cast<std::size_t>(e.to)]) {
                seen[static_cast<std::size_t>(e.to)] = 1;
                stack.push_back(e.to);
            }
    }
    return seen;
}

std::vector<char> Dinic::max_source_side() const {
    // v reaches t in the residual graph iff some residual edge (v, u) leads
    // towards t; scan reverse residual edges from t.
    std::vector<char> toT(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{t_};
    toT[static_cast<std::size_t>(t_)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const HalfEdge& e : adj_[static_cast<std::size_t>(v)]) {
            // residual capacity of the arc (e.to -> v) is the reverse entry's cap
            const HalfEdge& back = adj_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)];
            if (back.cap > 0 && !toT[static_cast<std::size_t>(e.to)]) {
                toT[static_cast<std::size_t>(e.to)] = 1;
                stack.push_back(e.to);
            }
        }
    }
    std::vector<char> side(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) side[static_cast<std::size_t>(v)] = !toT[static_cast<std::size_t>(v)];
    return side;
}

FlowResult min_st_edge_cut(const WeightedDigraph& g, int s, int t) {
    return min_st_edge_cut(g, s, t, true);
}

FlowResult min_st_edge_cut(const WeightedDigraph& g, int s, int t, bool wantMaximalSide) {
    if (g.mode() != WeightMode::EdgeWeighted) fail(Err::BadArgument, "min_st_edge_cut needs edge weights");
    if (s == t) fail(Err::SameVertex, "source equals sink");
    int n = g.vertex_count();
    Dinic solver(n);
    for (const auto& a : g.arcs())
        if (a.weight > 0) solver.add_edge(a.tail, a.head, a.weight);
    FlowResult out;
    out.maxFlowValue = solver.max_flow(s, t);
    std::vector<char> minSide = solver.min_source_side();
    out.sourceSide = VertexSet::from_mask(minSide);
    if (wantMaximalSide) out.sourceSideMaximal = VertexSet::from_mask(solver.max_source_side());
    std::vector<char> comp(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) comp[static_cast<std::size_t>(v)] = !minSide[static_cast<std::size_t>(v)];
    out.cut = EdgeCut{out.sourceSide, VertexSet::from_mask(comp), out.maxFlowValue};
    return out;
}

VertexFlowResult min_st_vertex_cut(const WeightedDigraph& g, int s, int t) {
    return min_st_vertex_cut(g, s, t, true);
}

namespace {

// Classify original vertices given the source side of the split graph.
VertexCut cut_from_split_side(const WeightedDigraph& g, int s, int t, const std::vector<char>& side,
                              const std::vector<int>& inId, const std::vector<int>& outId) {
    int n = g.vertex_count();
    std::vector<int> l, svec, r;
    for (int v = 0; v < n; ++v) {
        if (v == s) { l.push_back(v); continue; }
        if (v == t) { r.push_back(v); continue; }
        bool inSide = side[static_cast<std::size_t>(inId[static_cast<std::size_t>(v)])];
        bool outSide = side[static_cast<std::size_t>(outId[static_cast<std::size_t>(v)])];
        if (outSide) l.push_back(v);
        else if (inSide) svec.push_back(v);
        else r.push_back(v);
    }
    Weight value = 0;
    for (int v : svec) value += g.vertex_weight(v);
    return VertexCut{VertexSet(std::move(l)), VertexSet(std::move(svec)), VertexSet(std::move(r)), value};
}

}  // namespace

VertexFlowResult min_st_vertex_cut(const WeightedDigraph& g, int s, int t, bool wantMaximalSide) {
    if (g.mode() != WeightMode::VertexWeighted)
        fail(Err::BadArgument, "min_st_vertex_cut needs vertex weights");
    if (s == t) fail(Err::SameVertex, "source equals sink");
    for (int e : g.out_arcs(s))
        if (g.arc(e).head == t) fail(Err::NoVertexCut, "edge (s,t) forces an infinite cut");

    int n = g.vertex_count();
    // ids: s and t map to single nodes; every other v splits into in/out.
    std::vector<int> inId(static_cast<std::size_t>(n), -1), outId(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v == s || v == t) {
            inId[static_cast<std::size_t>(v)] = outId[static_cast<std::size_t>(v)] = next++;
        } else {
            inId[static_cast<std::size_t>(v)] = next++;
            outId[static_cast<std::size_t>(v)] = next++;
        }
    }
    Weight unbounded = 1;
    for (int v = 0; v < n; ++v) unbounded += g.vertex_weight(v);

    Dinic solver(next);
    for (int v = 0; v < n; ++v)
        if (v != s && v != t)
            solver.add_edge(inId[static_cast<std::size_t>(v)], outId[static_cast<std::size_t>(v)],
                            g.vertex_weight(v));
    for (const auto& a : g.arcs())
        solver.add_edge(outId[static_cast<std::size_t>(a.tail)], inId[static_cast<std::size_t>(a.head)],
                        unbounded);

    VertexFlowResult out;
    out.maxFlowValue = solver.max_flow(outId[static_cast<std::size_t>(s)], inId[static_cast<std::size_t>(t)]);
    out.cut = cut_from_split_side(g, s, t, solver.min_source_side(), inId, outId);
    out.sourceSide = out.cut.l;
    if (wantMaximalSide) {
        VertexCut maximal = cut_from_split_side(g, s, t, solver.max_source_side(), inId, outId);
        out.sourceSideMaximal = maximal.l;
    }
    return out;
}

}  // namespace dicut
