#include "doctest.h"

#include "weakcover/brute.hpp"
#include "weakcover/exact.hpp"
#include "weakcover/reductions.hpp"

using namespace weakcover;

namespace {
Graph eight_vertex_example() {
    return Graph({1, 2, 3, 4, 5, 6, 7, 8}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 8}, {8, 7}, {7, 6},
                                            {1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 7}, {3, 8}, {7, 5}, {3, 5}});
}
}  // namespace

TEST_CASE("zero-one reduction") {
    const Graph star({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    const auto s = zero_one_reduce(star);
    CHECK(s.reduced.empty());
    CHECK(s.i1 == VertexSet{1});
    CHECK(s.i0 == VertexSet{2, 3, 4, 5});
    const auto k = zero_one_reduce(complete_graph(4));
    CHECK(k.reduced == complete_graph(4));
    CHECK(k.i0.empty());
    CHECK(k.i1.empty());
    const auto iso = zero_one_reduce(Graph({1, 2, 3, 4}, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(iso.i0.count(4));
}

TEST_CASE("edge reduction examples") {
    const auto f = weak_edge_reduce(eight_vertex_example(), 1, 2);
    CHECK(f.reduced == Graph({4, 6, 7, 8}, {{4, 7}, {6, 7}, {7, 8}}));
    CHECK(f.frame.delta == VertexSet{3, 5});
    CHECK(f.frame.d_i == VertexSet{4, 8});
    CHECK(f.frame.i() == 1);
    CHECK(f.frame.j() == 2);
    const VertexSet lifted = reconstruct(f.frame, {7});
    CHECK(lifted == VertexSet{1, 3, 5, 7});
    CHECK(brute_vc_size(eight_vertex_example()) == 4);

    const auto k = weak_edge_reduce(complete_graph(4), 1, 2);
    CHECK(k.reduced.empty());

    const auto c = weak_edge_reduce(cycle_graph(5), 1, 2);
    CHECK(c.reduced == Graph({3, 4, 5}, {{3, 4}, {4, 5}, {3, 5}}));
    CHECK(reconstruct(c.frame, {3, 5}) == VertexSet{2, 3, 5});

    const auto rev = weak_edge_reduce(cycle_graph(5), 2, 1);
    CHECK(rev.frame.i() == 2);
    CHECK(rev.frame.d_i == VertexSet{3});

    CHECK_THROWS_AS(weak_edge_reduce(cycle_graph(5), 1, 3), GraphError);
    CHECK_THROWS_AS(reconstruct(c.frame, {3}), std::logic_error);

    ReductionFrame plain;
    plain.i1 = {9};
    CHECK(reconstruct(plain, {1, 2}) == VertexSet{1, 2, 9});
}

TEST_CASE("lifts and size identity on random graphs") {
    for (int s = 0; s < 40; ++s) {
        const Graph g = random_graph(5 + s % 8, 0.3 + 0.1 * (s % 5), 800 + s);
        const std::size_t delta = brute_vc_size(g);
        const auto z = zero_one_reduce(g);
        CHECK(brute_vc_size(z.reduced) + z.i1.size() == delta);
        for (const Edge& e : g.edges()) {
            const auto er = weak_edge_reduce(g, e.u, e.v);
            const VertexSet opt = exact_vc(er.reduced);
            const VertexSet lifted = reconstruct(er.frame, opt);
            CHECK(is_vertex_cover(g, lifted));
            CHECK(er.reduced.num_vertices() + er.frame.delta.size() + 2 == g.num_vertices());
            const std::size_t delta_bar = brute_restricted_size(g, e.u, e.v);
            CHECK(opt.size() + er.frame.delta.size() + 1 == delta_bar);
            if (delta_bar == delta) CHECK(lifted.size() == delta);
        }
    }
}
