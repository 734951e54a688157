#include "doctest.h"

#include "weakcover/graph.hpp"

using namespace weakcover;

namespace {
Graph eight_vertex_example() {
    return Graph({1, 2, 3, 4, 5, 6, 7, 8}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 8}, {8, 7}, {7, 6},
                                            {1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 7}, {3, 8}, {7, 5}, {3, 5}});
}

void check_symmetric(const Graph& g) {
    for (VertexId v : g.vertices()) {
        CHECK_FALSE(g.neighbors(v).count(v));
        for (VertexId w : g.neighbors(v)) CHECK(g.neighbors(w).count(v));
    }
}
}  // namespace

TEST_CASE("generators") {
    CHECK(complete_graph(4).num_edges() == 6);
    const Graph w = wheel_graph(5);
    CHECK(w.num_edges() == 8);
    CHECK(w.degree(5) == 4);
    const Graph d = double_wheel_graph(8);
    CHECK(d.num_edges() == 19);
    CHECK(d.has_edge(7, 8));
    CHECK(d.degree(7) == 7);
    CHECK(cycle_graph(5).num_edges() == 5);
    CHECK_THROWS(cycle_graph(2));
    CHECK_THROWS(wheel_graph(3));
    CHECK_THROWS(double_wheel_graph(4));
    CHECK_THROWS(gen_family(Family::random, 5));
    CHECK_THROWS(gen_family(Family::random, 5, 1.5, 1));
    CHECK(gen_family(Family::random, 12, 0.4, 99) == random_graph(12, 0.4, 99));
    CHECK(random_graph(10, 0.0, 1).num_edges() == 0);
    CHECK(random_graph(10, 1.0, 1).num_edges() == 45);
    CHECK(parse_family("double-wheel") == Family::double_wheel);
    CHECK_THROWS(parse_family("star"));
    for (int s = 0; s < 20; ++s) check_symmetric(random_graph(9, 0.5, s));
}

TEST_CASE("construction rejects bad edges") {
    CHECK_THROWS_AS(Graph({1, 2}, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph({1, 2}, {{1, 3}}), GraphError);
    CHECK(Graph({1, 2}, {{1, 2}, {2, 1}}).num_edges() == 1);
}

TEST_CASE("reduction sets") {
    const auto f = reduction_sets(eight_vertex_example(), 1, 2);
    CHECK(f.delta == VertexSet{3, 5});
    CHECK(f.d_i == VertexSet{4, 8});
    CHECK(f.d_j == VertexSet{7});
    const auto k = reduction_sets(complete_graph(4), 1, 2);
    CHECK(k.delta == VertexSet{3, 4});
    CHECK(k.d_i.empty());
    const auto c = reduction_sets(cycle_graph(5), 1, 2);
    CHECK(c.delta.empty());
    CHECK(c.d_i == VertexSet{5});
    CHECK(c.d_j == VertexSet{3});
    CHECK_THROWS_AS(reduction_sets(cycle_graph(5), 1, 3), GraphError);

    for (int s = 0; s < 30; ++s) {
        const Graph g = random_graph(10, 0.5, 100 + s);
        for (const Edge& e : g.edges()) {
            const auto r = reduction_sets(g, e.u, e.v);
            VertexSet ni = r.delta;
            ni.insert(r.d_i.begin(), r.d_i.end());
            ni.insert(e.v);
            CHECK(ni == g.neighbors(e.u));
            VertexSet nj = r.delta;
            nj.insert(r.d_j.begin(), r.d_j.end());
            nj.insert(e.u);
            CHECK(nj == g.neighbors(e.v));
            for (VertexId v : r.d_i) CHECK_FALSE(r.d_j.count(v));
        }
    }
}

TEST_CASE("covers and deletion") {
    CHECK(is_vertex_cover(complete_graph(4), {1, 2, 3}));
    CHECK_FALSE(is_vertex_cover(cycle_graph(5), {1, 3}));
    const Graph g = random_graph(9, 0.6, 3);
    CHECK(is_vertex_cover(g, g.vertices()));
    CHECK(delete_vertices(complete_graph(4), {4}) == complete_graph(3));
    CHECK(delete_vertices(cycle_graph(5), {1}) == Graph({2, 3, 4, 5}, {{2, 3}, {3, 4}, {4, 5}}));
    CHECK(delete_vertices(g, {}) == g);
    const Graph h = delete_vertices(g, {2, 5});
    for (const Edge& e : g.edges()) {
        const bool kept = e.u != 2 && e.u != 5 && e.v != 2 && e.v != 5;
        CHECK(h.has_edge(e.u, e.v) == kept);
    }
    CHECK(h.num_vertices() == 7);
}

TEST_CASE("DIMACS") {
    CHECK(parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == complete_graph(3));
    CHECK(parse_dimacs("c hi\np edge 3 2\ne 1 2\ne 2 1\n").num_edges() == 1);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p edge x 1\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\np edge 2 1\n"), DimacsError);
    for (int s = 0; s < 10; ++s) {
        const Graph g = random_graph(11, 0.4, s);
        CHECK(parse_dimacs(write_dimacs(g)) == g);
    }
}
