#include "doctest.h"

#include "weakcover/approx.hpp"
#include "weakcover/brute.hpp"

using namespace weakcover;

namespace {
Graph eight_vertex_example() {
    return Graph({1, 2, 3, 4, 5, 6, 7, 8}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 8}, {8, 7}, {7, 6},
                                            {1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 7}, {3, 8}, {7, 5}, {3, 5}});
}
}  // namespace

TEST_CASE("matching baseline") {
    const auto k2 = matching_2approx(complete_graph(2));
    CHECK(k2.size == 2);
    CHECK(ratio_certificate(complete_graph(2), k2) == Rat(2));
    CHECK(matching_2approx(cycle_graph(4)).size <= 4);
    CHECK(matching_2approx(Graph({1, 2, 3}, {})).cover.empty());
    for (int s = 0; s < 20; ++s) {
        const Graph g = random_graph(10, 0.4, 1200 + s);
        const auto r = matching_2approx(g);
        CHECK(is_vertex_cover(g, r.cover));
        CHECK(r.size <= 2 * brute_vc_size(g));
    }
}

TEST_CASE("WER with the exact oracle") {
    const auto [f, ft] = wer_exact(eight_vertex_example());
    CHECK(f.size == 4);
    CHECK(ratio_certificate(eight_vertex_example(), f) == Rat(1));
    const Graph bip = cycle_graph(6);
    const auto [b, bt] = wer_exact(bip);
    CHECK(b.size == 3);
    CHECK(bt.frames.size() == 1);
    CHECK_FALSE(bt.frames.back().weak_pair);
    CHECK(wer_exact(complete_graph(6)).first.size == 5);
    for (int s = 0; s < 40; ++s) {
        const Graph g = random_graph(5 + s % 9, 0.25 + 0.1 * (s % 6), 1300 + s);
        const auto [r, t] = wer_exact(g);
        CHECK(r.size == brute_vc_size(g));
        CHECK(accounting_holds(g, r, t));
        CHECK_FALSE(t.frames.back().weak_pair);
    }
}

TEST_CASE("pluggable oracles") {
    const Graph g = random_graph(10, 0.5, 77);
    // Any edge still yields a cover, in either orientation.
    const auto last = [](const Graph& h) {
        const Edge e = h.edges().back();
        return VertexPair{e.v, e.u};
    };
    const auto [r, t] = wer(g, last);
    CHECK(is_vertex_cover(g, r.cover));
    CHECK(accounting_holds(g, r, t));
    for (const auto& f : t.frames)
        if (f.weak_pair) CHECK(f.i() > f.j());
    const auto bogus = [](const Graph& h) { return VertexPair{*h.vertices().begin(), *h.vertices().begin()}; };
    CHECK_THROWS_AS(wer(complete_graph(4), bogus), InvariantViolation);
}

TEST_CASE("AWER") {
    for (int n = 4; n <= 9; ++n) {
        const auto [r, t] = awer(complete_graph(n), true);
        CHECK(r.size == static_cast<std::size_t>(n - 1));
        REQUIRE(t.per_frame_sigma);
        for (std::size_t s : *t.per_frame_sigma) CHECK(s == 0);
    }
    CHECK(ratio_certificate(complete_graph(6), awer(complete_graph(6), false).first) == Rat(1));
    for (int n = 4; n <= 10; ++n) {
        const auto [r, t] = awer(wheel_graph(n), true);
        CHECK(r.size == brute_vc_size(wheel_graph(n)));
        CHECK(r.sigma_bound->max_sigma == 0);
    }
    const auto [big, bt] = awer(random_graph(12, 0.3, 5), true, 8);
    CHECK(big.audit_skipped);
    CHECK_FALSE(big.sigma_bound);
}

TEST_CASE("AWER bound and accounting") {
    for (int s = 0; s < 25; ++s) {
        const Graph g = random_graph(6 + s % 9, 0.2 + 0.15 * (s % 5), 1400 + s);
        const auto [r, t] = awer(g, true);
        const std::size_t delta = brute_vc_size(g);
        REQUIRE(r.sigma_bound);
        CHECK(Rat(static_cast<std::int64_t>(r.size)) <=
              r.sigma_bound->guarantee * Rat(static_cast<std::int64_t>(delta)));
        CHECK(accounting_holds(g, r, t));
        std::size_t total = 0;
        for (std::size_t x : *t.per_frame_sigma) total += x;
        CHECK(r.size == delta + total);
        if (r.best_z) CHECK(*r.best_z <= Rat(static_cast<std::int64_t>(delta)));
        CHECK(r.lpr_bound <= Rat(static_cast<std::int64_t>(delta)));
        CHECK(r.ratio_vs_lpr <= Rat(2));
    }
}
