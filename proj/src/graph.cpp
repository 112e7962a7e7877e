#include "dicut/graph.hpp"

#include <algorithm>
#include <queue>

namespace dicut {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_mask(const std::vector<char>& mask) {
    std::vector<int> ids;
    for (int v = 0; v < static_cast<int>(mask.size()); ++v)
        if (mask[static_cast<std::size_t>(v)]) ids.push_back(v);
    VertexSet out;
    out.ids_ = std::move(ids);
    return out;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::vector<char> VertexSet::mask(int n) const {
    std::vector<char> out(static_cast<std::size_t>(n), 0);
    for (int v : ids_) out[static_cast<std::size_t>(v)] = 1;
    return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end());
}

WeightedDigraph::WeightedDigraph(int n, WeightMode mode, std::vector<Arc> arcs,
                                 std::vector<Weight> vertexWeights, bool allowZeroWeights)
    : n_(n), mode_(mode), allowZero_(allowZeroWeights), arcs_(std::move(arcs)),
      vertexWeights_(std::move(vertexWeights)) {
    if (n_ < 0) fail(Err::BadArgument, "negative vertex count");
    Weight minAllowed = allowZero_ ? 0 : 1;
    for (std::size_t e = 0; e < arcs_.size(); ++e) {
        Arc& a = arcs_[e];
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            fail(Err::BadArgument, "arc endpoint out of range");
        if (a.tail == a.head) fail(Err::SelfLoop, "self-loop at vertex " + std::to_string(a.tail));
        if (mode_ == WeightMode::EdgeWeighted) {
            if (a.weight < minAllowed) fail(Err::WeightOutOfRange, "edge weight below minimum");
        } else {
            a.weight = 1;
        }
    }
    if (mode_ == WeightMode::VertexWeighted) {
        if (static_cast<int>(vertexWeights_.size()) != n_)
            fail(Err::BadArgument, "vertex weight table size mismatch");
        for (Weight w : vertexWeights_)
            if (w < minAllowed) fail(Err::WeightOutOfRange, "vertex weight below minimum");
    } else {
        vertexWeights_.assign(static_cast<std::size_t>(n_), 1);
    }

    outOff_.assign(static_cast<std::size_t>(n_) + 1, 0);
    inOff_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Arc& a : arcs_) {
        ++outOff_[static_cast<std::size_t>(a.tail) + 1];
        ++inOff_[static_cast<std::size_t>(a.head) + 1];
    }
    for (int v = 0; v < n_; ++v) {
        outOff_[static_cast<std::size_t>(v) + 1] += outOff_[static_cast<std::size_t>(v)];
        inOff_[static_cast<std::size_t>(v) + 1] += inOff_[static_cast<std::size_t>(v)];
    }
    outArc_.resize(arcs_.size());
    inArc_.resize(arcs_.size());
    std::vector<int> outPos(outOff_.begin(), outOff_.end() - 1);
    std::vector<int> inPos(inOff_.begin(), inOff_.end() - 1);
    for (int e = 0; e < static_cast<int>(arcs_.size()); ++e) {
        const Arc& a = arcs_[static_cast<std::size_t>(e)];
        outArc_[static_cast<std::size_t>(outPos[static_cast<std::size_t>(a.tail)]++)] = e;
        inArc_[static_cast<std::size_t>(inPos[static_cast<std::size_t>(a.head)]++)] = e;
    }

    if (mode_ == WeightMode::EdgeWeighted) {
        for (const Arc& a : arcs_) {
            maxWeight_ = std::max(maxWeight_, a.weight);
            totalWeight_ += a.weight;
        }
    } else {
        for (Weight w : vertexWeights_) {
            maxWeight_ = std::max(maxWeight_, w);
            totalWeight_ += w;
        }
    }
}

WeightedDigraph WeightedDigraph::edge_weighted(int n, std::vector<Arc> arcs, bool allowZeroWeights) {
    return WeightedDigraph(n, WeightMode::EdgeWeighted, std::move(arcs), {}, allowZeroWeights);
}

WeightedDigraph WeightedDigraph::vertex_weighted(int n, std::vector<Arc> arcs,
                                                 std::vector<Weight> vertexWeights, bool allowZeroWeights) {
    return WeightedDigraph(n, WeightMode::VertexWeighted, std::move(arcs), std::move(vertexWeights),
                           allowZeroWeights);
}

std::span<const int> WeightedDigraph::out_arcs(int v) const {
    return {outArc_.data() + outOff_[static_cast<std::size_t>(v)],
            outArc_.data() + outOff_[static_cast<std::size_t>(v) + 1]};
}

std::span<const int> WeightedDigraph::in_arcs(int v) const {
    return {inArc_.data() + inOff_[static_cast<std::size_t>(v)],
            inArc_.data() + inOff_[static_cast<std::size_t>(v) + 1]};
}

int WeightedDigraph::out_degree(int v) const {
    return outOff_[static_cast<std::size_t>(v) + 1] - outOff_[static_cast<std::size_t>(v)];
}

int WeightedDigraph::in_degree(int v) const {
    return inOff_[static_cast<std::size_t>(v) + 1] - inOff_[static_cast<std::size_t>(v)];
}

std::vector<int> WeightedDigraph::out_neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(out_degree(v)));
    for (int e : out_arcs(v)) out.push_back(arc(e).head);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> WeightedDigraph::in_neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(in_degree(v)));
    for (int e : in_arcs(v)) out.push_back(arc(e).tail);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool WeightedDigraph::operator==(const WeightedDigraph& other) const {
    if (n_ != other.n_ || mode_ != other.mode_ || arcs_.size() != other.arcs_.size()) return false;
    for (std::size_t e = 0; e < arcs_.size(); ++e) {
        const Arc& a = arcs_[e];
        const Arc& b = other.arcs_[e];
        if (a.tail != b.tail || a.head != b.head || a.weight != b.weight) return false;
    }
    return vertexWeights_ == other.vertexWeights_;
}

WeightedDigraph reverse(const WeightedDigraph& g) {
    std::vector<WeightedDigraph::Arc> arcs = g.arcs();
    for (auto& a : arcs) std::swap(a.tail, a.head);
    return WeightedDigraph(g.vertex_count(), g.mode(), std::move(arcs), g.vertex_weights(),
                           g.zero_weights_allowed());
}

Weight edge_cut_value(const WeightedDigraph& g, const VertexSet& x) {
    if (g.mode() != WeightMode::EdgeWeighted) fail(Err::BadArgument, "edge_cut_value needs edge weights");
    if (x.empty() || x.size() == g.vertex_count()) fail(Err::EmptySide, "cut side is empty");
    std::vector<char> in = x.mask(g.vertex_count());
    Weight total = 0;
    for (const auto& a : g.arcs())
        if (in[static_cast<std::size_t>(a.tail)] && !in[static_cast<std::size_t>(a.head)]) total += a.weight;
    return total;
}

std::vector<int> out_neighbor_set(const WeightedDigraph& g, const VertexSet& a) {
    std::vector<char> inside = a.mask(g.vertex_count());
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> out;
    for (int v : a.ids())
        for (int e : g.out_arcs(v)) {
            int h = g.arc(e).head;
            if (!inside[static_cast<std::size_t>(h)] && !seen[static_cast<std::size_t>(h)]) {
                seen[static_cast<std::size_t>(h)] = 1;
                out.push_back(h);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

Weight out_neighbor_weight(const WeightedDigraph& g, const VertexSet& l) {
    if (g.mode() != WeightMode::VertexWeighted)
        fail(Err::BadArgument, "out_neighbor_weight needs vertex weights");
    Weight total = 0;
    for (int v : out_neighbor_set(g, l)) total += g.vertex_weight(v);
    return total;
}

std::int64_t out_volume(const WeightedDigraph& g, const VertexSet& a) {
    std::int64_t total = 0;
    for (int v : a.ids()) total += g.out_degree(v);
    return total;
}

void validate_edge_cut(const WeightedDigraph& g, const EdgeCut& cut) {
    int n = g.vertex_count();
    if (cut.x.empty() || cut.y.empty()) fail(Err::EmptySide, "edge cut with an empty side");
    if (cut.x.size() + cut.y.size() != n) fail(Err::BadArgument, "edge cut does not partition V");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : cut.x.ids()) seen[static_cast<std::size_t>(v)] = 1;
    for (int v : cut.y.ids()) {
        if (seen[static_cast<std::size_t>(v)]) fail(Err::BadArgument, "edge cut sides overlap");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (edge_cut_value(g, cut.x) != cut.value) fail(Err::BadArgument, "edge cut value mismatch");
}

void validate_vertex_cut(const WeightedDigraph& g, const VertexCut& cut) {
    int n = g.vertex_count();
    if (cut.l.empty() || cut.r.empty()) fail(Err::EmptySide, "vertex cut with an empty side");
    if (cut.l.size() + cut.s.size() + cut.r.size() != n)
        fail(Err::BadArgument, "vertex cut does not partition V");
    std::vector<char> where(static_cast<std::size_t>(n), 0);
    for (int v : cut.l.ids()) where[static_cast<std::size_t>(v)] = 1;
    for (int v : cut.s.ids()) {
        if (where[static_cast<std::size_t>(v)]) fail(Err::BadArgument, "vertex cut sides overlap");
        where[static_cast<std::size_t>(v)] = 2;
    }
    for (int v : cut.r.ids()) {
        if (where[static_cast<std::size_t>(v)]) fail(Err::BadArgument, "vertex cut sides overlap");
        where[static_cast<std::size_t>(v)] = 3;
    }
    for (const auto& a : g.arcs())
        if (where[static_cast<std::size_t>(a.tail)] == 1 && where[static_cast<std::size_t>(a.head)] == 3)
            fail(Err::BadArgument, "vertex cut has an L->R edge");
    Weight sum = 0;
    for (int v : cut.s.ids()) sum += g.vertex_weight(v);
    if (sum != cut.value) fail(Err::BadArgument, "vertex cut value mismatch");
}

std::vector<char> reachable_from(const WeightedDigraph& g, int source) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack{source};
    seen[static_cast<std::size_t>(source)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.out_arcs(v)) {
            int h = g.arc(e).head;
            if (!seen[static_cast<std::size_t>(h)]) {
                seen[static_cast<std::size_t>(h)] = 1;
                stack.push_back(h);
            }
        }
    }
    return seen;
}

std::vector<char> reaches_to(const WeightedDigraph& g, int target) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack{target};
    seen[static_cast<std::size_t>(target)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.in_arcs(v)) {
            int t = g.arc(e).tail;
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

}  // namespace dicut
