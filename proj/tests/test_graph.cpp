#include <doctest.h>

#include "dicut/graph.hpp"
#include "helpers.hpp"

using namespace dicut;

namespace {

WeightedDigraph three_cycle() {
    return WeightedDigraph::edge_weighted(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
}

}  // namespace

TEST_CASE("reverse flips every arc and keeps weights") {
    WeightedDigraph g = three_cycle();
    WeightedDigraph r = reverse(g);
    REQUIRE(r.arc_count() == 3);
    CHECK(r.arc(0).tail == 1);
    CHECK(r.arc(0).head == 0);
    CHECK(r.arc(1).tail == 2);
    CHECK(r.arc(2).tail == 0);
    CHECK(r.arc(2).weight == 3);

    WeightedDigraph single = WeightedDigraph::edge_weighted(2, {{0, 1, 5}});
    WeightedDigraph rs = reverse(single);
    CHECK(rs.arc(0).tail == 1);
    CHECK(rs.arc(0).weight == 5);
}

TEST_CASE("reverse is an involution") {
    RngStream rng(11);
    for (int it = 0; it < 30; ++it) {
        WeightedDigraph g = testing::random_edge_graph(6, 12, 9, rng);
        CHECK(reverse(reverse(g)) == g);
    }
}

TEST_CASE("edge_cut_value matches an independent edge scan") {
    WeightedDigraph g = three_cycle();
    CHECK(edge_cut_value(g, VertexSet({0, 2})) == 1);  // only 0->1 crosses

    WeightedDigraph st = WeightedDigraph::edge_weighted(2, {{0, 1, 5}});
    CHECK(edge_cut_value(st, VertexSet({0})) == 5);
    CHECK(edge_cut_value(st, VertexSet({1})) == 0);

    CHECK_THROWS_AS(edge_cut_value(st, VertexSet()), Error);
    CHECK_THROWS_AS(edge_cut_value(st, VertexSet({0, 1})), Error);

    RngStream rng(5);
    for (int it = 0; it < 50; ++it) {
        WeightedDigraph h = testing::random_edge_graph(7, 14, 8, rng);
        unsigned mask = 1 + static_cast<unsigned>(rng.below((1u << 7) - 2));
        std::vector<int> ids;
        for (int v = 0; v < 7; ++v)
            if (mask & (1u << v)) ids.push_back(v);
        VertexSet x(ids);
        Weight direct = 0;
        for (const auto& a : h.arcs())
            if (x.contains(a.tail) && !x.contains(a.head)) direct += a.weight;
        CHECK(edge_cut_value(h, x) == direct);
    }
}

TEST_CASE("out_neighbor_weight on the two-edge path") {
    WeightedDigraph g = WeightedDigraph::vertex_weighted(3, {{0, 1, 1}, {1, 2, 1}}, {2, 5, 1});
    CHECK(out_neighbor_weight(g, VertexSet({0})) == 5);
    CHECK(out_neighbor_weight(g, VertexSet({0, 1})) == 1);
    CHECK(out_neighbor_weight(g, VertexSet()) == 0);
}

TEST_CASE("out_volume counts out-degrees") {
    WeightedDigraph star = WeightedDigraph::edge_weighted(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK(out_volume(star, VertexSet({0})) == 3);
    CHECK(out_volume(star, VertexSet({0, 1, 2, 3})) == star.arc_count());

    WeightedDigraph cyc = WeightedDigraph::edge_weighted(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    CHECK(out_volume(cyc, VertexSet({0, 1})) == 2);
}

TEST_CASE("out-volume of a set and of its complement sum to m") {
    RngStream rng(7);
    for (int it = 0; it < 40; ++it) {
        WeightedDigraph g = testing::random_edge_graph(8, 16, 4, rng);
        unsigned mask = static_cast<unsigned>(rng.below(1u << 8));
        std::vector<int> a, b;
        for (int v = 0; v < 8; ++v) (mask & (1u << v) ? a : b).push_back(v);
        CHECK(out_volume(g, VertexSet(a)) + out_volume(g, VertexSet(b)) == g.arc_count());
    }
}

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(WeightedDigraph::edge_weighted(2, {{0, 0, 1}}), Error);
    CHECK_THROWS_AS(WeightedDigraph::edge_weighted(2, {{0, 1, 0}}), Error);
    CHECK_THROWS_AS(WeightedDigraph::vertex_weighted(2, {{0, 1, 1}}, {1, 0}), Error);
    CHECK_NOTHROW(WeightedDigraph::edge_weighted(2, {{0, 1, 0}}, true));
}

TEST_CASE("cut validators enforce the type invariants") {
    WeightedDigraph g = three_cycle();
    EdgeCut ok{VertexSet({0}), VertexSet({1, 2}), 1};
    CHECK_NOTHROW(validate_edge_cut(g, ok));
    EdgeCut badValue{VertexSet({0}), VertexSet({1, 2}), 2};
    CHECK_THROWS_AS(validate_edge_cut(g, badValue), Error);
    EdgeCut overlap{VertexSet({0, 1}), VertexSet({1, 2}), 1};
    CHECK_THROWS_AS(validate_edge_cut(g, overlap), Error);

    WeightedDigraph vg = WeightedDigraph::vertex_weighted(3, {{0, 1, 1}, {1, 2, 1}}, {2, 5, 1});
    VertexCut vok{VertexSet({0}), VertexSet({1}), VertexSet({2}), 5};
    CHECK_NOTHROW(validate_vertex_cut(vg, vok));
    VertexCut lr{VertexSet({0}), VertexSet({2}), VertexSet({1}), 1};
    CHECK_THROWS_AS(validate_vertex_cut(vg, lr), Error);  // 0->1 is an L->R edge
}

TEST_CASE("vertex set membership and lexicographic order") {
    VertexSet a({3, 1, 3});
    CHECK(a.ids() == std::vector<int>{1, 3});
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK(lex_less(VertexSet({0}), VertexSet({0, 1})));
    CHECK(lex_less(VertexSet({0, 1}), VertexSet({1})));
}

TEST_CASE("parallel edges are first-class") {
    WeightedDigraph g = WeightedDigraph::edge_weighted(2, {{0, 1, 2}, {0, 1, 3}});
    CHECK(g.arc_count() == 2);
    CHECK(edge_cut_value(g, VertexSet({0})) == 5);
    CHECK(g.out_neighbors(0) == std::vector<int>{1});
}
