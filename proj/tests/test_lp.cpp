#include "doctest.h"

#include <random>

#include "weakcover/brute.hpp"
#include "weakcover/lp.hpp"

using namespace weakcover;

namespace {
LpProblem with_cut(const Graph& g, const std::vector<VertexId>& cycle) {
    LpProblem p = edge_problem(g);
    p.rows.push_back(OddCycle{cycle}.row());
    return p;
}

Assignment all(const Graph& g, Rat v) {
    Assignment x;
    for (VertexId u : g.vertices()) x[u] = v;
    return x;
}
}  // namespace

TEST_CASE("simplex on small programs") {
    const auto k2 = simplex_solve(edge_problem(complete_graph(2)));
    CHECK(k2.objective == Rat(1));
    CHECK(k2.values.at(1) + k2.values.at(2) == Rat(1));
    CHECK(k2.values.at(1).is_integer());

    const auto k4 = simplex_solve(edge_problem(complete_graph(4)));
    CHECK(k4.objective == Rat(2));
    for (const auto& [v, x] : k4.values) CHECK(x == Rat(1, 2));
    CHECK(k4.tight_rows.size() == 6);

    const auto c3 = simplex_solve(with_cut(cycle_graph(3), {1, 2, 3}));
    CHECK(c3.objective == Rat(2));
    CHECK(c3.is_basic);
}

TEST_CASE("equality row and infeasibility") {
    LpProblem p = edge_problem(complete_graph(2), Edge(1, 2));
    CHECK(simplex_solve(p).objective == Rat(1));
    CHECK_THROWS_AS(edge_problem(cycle_graph(4), Edge(1, 3)), std::invalid_argument);

    LpProblem bad;
    bad.variables = {1, 2};
    bad.rows.push_back({{{1, Rat(1)}, {2, Rat(1)}}, Relation::equal, Rat(1)});
    bad.rows.push_back({{{1, Rat(1)}}, Relation::greater_equal, Rat(2)});
    CHECK_THROWS_AS(simplex_solve(bad), LpInfeasible);

    LpProblem two = bad;
    two.rows[1].relation = Relation::equal;
    CHECK_THROWS_AS(simplex_solve(two), std::invalid_argument);
    LpProblem unknown;
    unknown.variables = {1};
    unknown.rows.push_back({{{2, Rat(1)}}, Relation::greater_equal, Rat(1)});
    CHECK_THROWS_AS(simplex_solve(unknown), std::invalid_argument);
}

TEST_CASE("solutions are feasible, basic and deterministic") {
    for (int s = 0; s < 40; ++s) {
        const Graph g = random_graph(5 + s % 8, 0.5, 300 + s);
        const LpProblem p = edge_problem(g);
        const auto a = simplex_solve(p);
        const auto b = simplex_solve(p);
        CHECK(a.values == b.values);
        CHECK(is_feasible(p, a.values));
        CHECK(tight_constraint_rank(p, a.values) == g.num_vertices());
        for (std::size_t r : a.tight_rows) CHECK(p.rows[r].lhs(a.values) == p.rows[r].rhs);
    }
}

TEST_CASE("half-integral LPR") {
    for (int s = 0; s < 60; ++s) {
        const Graph g = random_graph(3 + s % 10, 0.2 + 0.3 * (s % 3), 400 + s);
        for (const auto& [v, x] : simplex_solve(edge_problem(g)).values)
            CHECK((x.is_zero() || x == Rat(1, 2) || x == Rat(1)));
    }
}

TEST_CASE("separation examples") {
    const auto t = separate_odd_cycle(cycle_graph(3), all(cycle_graph(3), Rat(1, 2)));
    REQUIRE(t);
    CHECK(t->vertices == std::vector<VertexId>{1, 2, 3});
    CHECK(t->s() == 1);
    const auto c5 = separate_odd_cycle(cycle_graph(5), all(cycle_graph(5), Rat(1, 2)));
    REQUIRE(c5);
    CHECK(c5->vertices == std::vector<VertexId>{1, 2, 3, 4, 5});
    CHECK_FALSE(separate_odd_cycle(cycle_graph(3), all(cycle_graph(3), Rat(2, 3))));
    CHECK_FALSE(separate_odd_cycle(cycle_graph(4), all(cycle_graph(4), Rat(1, 2))));
    Assignment bad = all(cycle_graph(3), Rat(1, 2));
    bad[1] = Rat(1, 4);
    CHECK_THROWS_AS(separate_odd_cycle(cycle_graph(3), bad), std::invalid_argument);
    CHECK(canonical_cycle({4, 2, 7}).vertices == std::vector<VertexId>{2, 4, 7});
    CHECK(canonical_cycle({7, 4, 2}).vertices == std::vector<VertexId>{2, 4, 7});
}

TEST_CASE("separation finds the least-weight violated cycle") {
    std::mt19937_64 rng(5);
    const std::vector<Rat> levels = {Rat(0), Rat(1, 3), Rat(1, 2), Rat(1, 2), Rat(2, 3), Rat(1)};
    for (int s = 0; s < 60; ++s) {
        const Graph g = random_graph(4 + s % 6, 0.6, 500 + s);
        Assignment x;
        for (VertexId v : g.vertices()) x[v] = levels[rng() % levels.size()];
        for (const Edge& e : g.edges())
            if (x[e.u] + x[e.v] < Rat(1)) x[e.v] = Rat(1) - x[e.u];
        const auto found = separate_odd_cycle(g, x);
        const auto brute = brute_violated_cycle(g, x);
        REQUIRE(found.has_value() == brute.has_value());
        if (!found) continue;
        Rat w;
        const auto& c = found->vertices;
        for (std::size_t k = 0; k < c.size(); ++k) w += x[c[k]] + x[c[(k + 1) % c.size()]] - Rat(1);
        CHECK(w == brute->weight);
    }
}

TEST_CASE("cutting planes") {
    CHECK(cutting_plane_solve(complete_graph(3)).solution.objective == Rat(2));
    CHECK(cutting_plane_solve(complete_graph(6)).solution.objective == Rat(4));
    const auto c4 = cutting_plane_solve(cycle_graph(4));
    CHECK(c4.solution.objective == Rat(2));
    CHECK(c4.cuts.empty());
    for (int s = 0; s < 20; ++s) {
        const Graph g = random_graph(8, 0.5, 600 + s);
        const auto r = cutting_plane_solve(g);
        CHECK_FALSE(separate_odd_cycle(g, r.solution.values));
        CHECK(is_feasible(r.final_problem, r.solution.values));
        CHECK(tight_constraint_rank(r.final_problem, r.solution.values) == g.num_vertices());
    }
}

TEST_CASE("incremental rows continue from the last basis") {
    const Graph g = cycle_graph(5);
    IncrementalLp lp(edge_problem(g));
    CHECK(lp.solve().objective == Rat(5, 2));
    lp.add_row(OddCycle{{1, 2, 3, 4, 5}}.row());
    CHECK(lp.solve().objective == Rat(3));
    CHECK(simplex_solve(lp.problem()).objective == Rat(3));
}
