#include "doctest.h"

#include "weakcover/brute.hpp"
#include "weakcover/exact.hpp"
#include "weakcover/relaxations.hpp"

using namespace weakcover;

namespace {
Graph star(int leaves) {
    std::vector<Edge> edges;
    VertexSet vs = {1};
    for (int k = 2; k <= leaves + 1; ++k) {
        vs.insert(k);
        edges.emplace_back(1, k);
    }
    return Graph(vs, edges);
}
}  // namespace

TEST_CASE("LPR") {
    for (int n = 3; n <= 8; ++n) CHECK(solve_lpr(complete_graph(n)).z_value == Rat(n, 2));
    const auto s = solve_lpr(star(4));
    CHECK(s.z_value == Rat(1));
    CHECK(s.solution.values.at(1) == Rat(1));
    CHECK(s.solution.values.at(3).is_zero());
    const auto c5 = solve_lpr(cycle_graph(5));
    CHECK(c5.z_value == Rat(5, 2));
    CHECK_FALSE(c5.restricted_edge);
}

TEST_CASE("ELP") {
    for (int n : {3, 6, 9}) CHECK(solve_elp(complete_graph(n)).z_value == Rat(2 * n, 3));
    CHECK(solve_elp(cycle_graph(5)).z_value == Rat(3));
    CHECK(solve_elp(cycle_graph(6)).z_value == solve_lpr(cycle_graph(6)).z_value);
    CHECK(solve_elp(star(3)).cuts == 0);
}

TEST_CASE("RELP") {
    for (int n = 3; n <= 7; ++n) {
        const auto r = solve_relp(complete_graph(n), 1, 2);
        CHECK(r.z_value == Rat(n - 1));
        for (const auto& [v, x] : r.solution.values) CHECK(x.is_integer());
        REQUIRE(r.restricted_edge);
        CHECK(*r.restricted_edge == Edge(1, 2));
    }
    CHECK(solve_relp(complete_graph(2), 1, 2).z_value == Rat(1));
    CHECK_THROWS_AS(solve_relp(cycle_graph(5), 1, 3), GraphError);
    const auto w = solve_relp(wheel_graph(7), 1, 7);
    for (const auto& [v, x] : w.solution.values) CHECK(x.is_integer());
}

TEST_CASE("restricted scan and active edges") {
    const auto k4 = best_restricted_edge(complete_graph(4));
    CHECK(k4.z == Rat(3));
    CHECK(k4.edge == Edge(1, 2));
    CHECK(k4.all_z.size() == 6);
    const auto c5 = best_restricted_edge(cycle_graph(5));
    CHECK(c5.edge == Edge(1, 2));
    for (const auto& [e, z] : c5.all_z) CHECK(z == Rat(3));
    CHECK(almost_weak(cycle_graph(5)) == Edge(1, 2));
    CHECK_THROWS_AS(best_restricted_edge(Graph({1, 2}, {})), GraphError);

    const Graph dw = double_wheel_graph(8);
    const auto scan = best_restricted_edge(dw);
    CHECK_FALSE(scan.edge == Edge(7, 8));
    CHECK(scan.z <= Rat(5));
    CHECK(sigma(dw, scan.edge.u, scan.edge.v).sigma == 0);
    CHECK(almost_weak(dw) == almost_weak(double_wheel_graph(8)));

    const auto half = solve_lpr(complete_graph(4));
    CHECK(active_edges(complete_graph(4), half.solution.values).size() == 6);
    Assignment ones;
    for (int v = 1; v <= 4; ++v) ones[v] = 1;
    CHECK(active_edges(complete_graph(4), ones).empty());
}

TEST_CASE("relaxation chain stays below the optimum") {
    for (int s = 0; s < 25; ++s) {
        const Graph g = random_graph(6 + s % 5, 0.5, 700 + s);
        if (g.num_edges() == 0) continue;
        const Rat lpr = solve_lpr(g).z_value;
        const Rat elp = solve_elp(g).z_value;
        const auto scan = best_restricted_edge(g);
        const Rat delta(static_cast<std::int64_t>(brute_vc_size(g)));
        CHECK(lpr <= elp);
        CHECK(elp <= scan.z);
        CHECK(scan.z <= delta);
        CHECK(delta <= Rat(2) * lpr);
        const auto relp = solve_relp(g, scan.edge.u, scan.edge.v);
        const auto act = active_edges(g, relp.solution.values);
        CHECK(std::find(act.begin(), act.end(), scan.edge) != act.end());
    }
}

TEST_CASE("double wheel: RELP off the axis gives an optimal cover") {
    for (int n : {8, 10}) {
        const Graph g = double_wheel_graph(n);
        const std::size_t delta = brute_vc_size(g);
        for (const Edge& e : g.edges()) {
            if (e == Edge(n - 1, n)) continue;
            const auto r = solve_relp(g, e.u, e.v);
            VertexSet ones;
            bool integral = true;
            for (const auto& [v, x] : r.solution.values) {
                integral = integral && x.is_integer();
                if (x == Rat(1)) ones.insert(v);
            }
            CHECK(integral);
            CHECK(is_vertex_cover(g, ones));
            CHECK(ones.size() == delta);
        }
    }
}
