#pragma once

#include <vector>

#include "dicut/graph.hpp"

namespace dicut {

// Exact s-t max-flow / min-cut on integral capacities. Dinic with capacity
// scaling; one solver instance per solve, safe to run concurrently on the
// same immutable input graph.
class Dinic {
public:
    explicit Dinic(int n);

    int add_edge(int u, int v, Weight cap);
    Weight max_flow(int s, int t);

    // Residual-reachable set from s: the canonical minimal min-cut side.
    std::vector<char> min_source_side() const;
    // Complement of the vertices that can reach t in the residual graph:
    // the maximal min-cut side. Contains min_source_side().
    std::vector<char> max_source_side() const;

private:
    struct HalfEdge {
        int to;
        int rev;
        Weight cap;
    };

    bool bfs(Weight threshold);
    Weight dfs(int v, Weight limit, Weight threshold);

    int n_;
    int s_ = -1, t_ = -1;
    std::vector<std::vector<HalfEdge>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

struct FlowResult {
    EdgeCut cut;                  // X = minimal source side
    Weight maxFlowValue = 0;
    VertexSet sourceSide;         // same as cut.x
    VertexSet sourceSideMaximal;  // sink-side-maximal source side
};

struct VertexFlowResult {
    VertexCut cut;                // L = minimal source side
    Weight maxFlowValue = 0;
    VertexSet sourceSide;         // same as cut.l
    VertexSet sourceSideMaximal;  // maximal L among minimum s-t vertex-cuts
};

FlowResult min_st_edge_cut(const WeightedDigraph& g, int s, int t);
FlowResult min_st_edge_cut(const WeightedDigraph& g, int s, int t, bool wantMaximalSide);

// Vertex-splitting reduction: v -> (v_in, v_out) with capacity w(v); original
// edges get capacity 1 + sum of vertex weights, which no finite cut reaches.
VertexFlowResult min_st_vertex_cut(const WeightedDigraph& g, int s, int t);
VertexFlowResult min_st_vertex_cut(const WeightedDigraph& g, int s, int t, bool wantMaximalSide);

}  // namespace dicut
