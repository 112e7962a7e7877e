#pragma once

#include <span>
#include <vector>

#include "dicut/types.hpp"

namespace dicut {

enum class WeightMode { EdgeWeighted, VertexWeighted };

// Set of vertex ids, kept sorted and deduplicated. Enumeration walks ids();
// membership tests use contains() or a mask() snapshot on hot paths.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);
    static VertexSet from_mask(const std::vector<char>& mask);

    const std::vector<int>& ids() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int v) const;
    std::vector<char> mask(int n) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> ids_;
};

// Lexicographic order on the sorted id sequences; used for distinguished cuts.
bool lex_less(const VertexSet& a, const VertexSet& b);

// Directed multigraph with positive integral weights on edges or on vertices.
// Immutable after construction; parallel edges allowed, self-loops rejected.
class WeightedDigraph {
public:
    struct Arc {
        int tail = 0;
        int head = 0;
        Weight weight = 1;  // ignored in vertex-weighted mode
    };

    WeightedDigraph() : WeightedDigraph(0, WeightMode::EdgeWeighted, {}) {}
    WeightedDigraph(int n, WeightMode mode, std::vector<Arc> arcs,
                    std::vector<Weight> vertexWeights = {}, bool allowZeroWeights = false);

    static WeightedDigraph edge_weighted(int n, std::vector<Arc> arcs, bool allowZeroWeights = false);
    static WeightedDigraph vertex_weighted(int n, std::vector<Arc> arcs, std::vector<Weight> vertexWeights,
                                           bool allowZeroWeights = false);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    WeightMode mode() const { return mode_; }
    bool zero_weights_allowed() const { return allowZero_; }

    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int e) const { return arcs_[static_cast<std::size_t>(e)]; }
    Weight vertex_weight(int v) const { return vertexWeights_[static_cast<std::size_t>(v)]; }
    const std::vector<Weight>& vertex_weights() const { return vertexWeights_; }

    std::span<const int> out_arcs(int v) const;
    std::span<const int> in_arcs(int v) const;
    int out_degree(int v) const;
    int in_degree(int v) const;

    // Deduplicated, sorted neighbour id sets.
    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;

    Weight max_weight() const { return maxWeight_; }
    Weight total_weight() const { return totalWeight_; }

    bool operator==(const WeightedDigraph& other) const;

private:
    int n_;
    WeightMode mode_;
    bool allowZero_;
    std::vector<Arc> arcs_;
    std::vector<Weight> vertexWeights_;
    std::vector<int> outOff_, outArc_, inOff_, inArc_;
    Weight maxWeight_ = 0;
    Weight totalWeight_ = 0;
};

// Ordered bipartition (X, Y) of V; value is the weight of edges from X to Y.
struct EdgeCut {
    VertexSet x;
    VertexSet y;
    Weight value = 0;
};

// Ordered tripartition (L, S, R) with no L->R edges; value is w(S).
struct VertexCut {
    VertexSet l;
    VertexSet s;
    VertexSet r;
    Weight value = 0;
};

WeightedDigraph reverse(const WeightedDigraph& g);

Weight edge_cut_value(const WeightedDigraph& g, const VertexSet& x);
Weight out_neighbor_weight(const WeightedDigraph& g, const VertexSet& l);
std::int64_t out_volume(const WeightedDigraph& g, const VertexSet& a);

// N+(A) = (union of out-neighbours of A) \ A, as a sorted id list.
std::vector<int> out_neighbor_set(const WeightedDigraph& g, const VertexSet& a);

// Throwing validators; every cut emitted by the CLI passes through these.
void validate_edge_cut(const WeightedDigraph& g, const EdgeCut& cut);
void validate_vertex_cut(const WeightedDigraph& g, const VertexCut& cut);

// Vertices reachable from source along edge direction.
std::vector<char> reachable_from(const WeightedDigraph& g, int source);
// Vertices that can reach target along edge direction.
std::vector<char> reaches_to(const WeightedDigraph& g, int target);

}  // namespace dicut
