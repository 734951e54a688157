#include "doctest.h"

#include "weakcover/report.hpp"

using namespace weakcover;

TEST_CASE("exact strings and sorted covers") {
    CHECK(to_json(Rat(5, 2)).get<std::string>() == "5/2");
    CHECK(to_json(VertexSet{3, 1, 2}).dump() == "[1,2,3]");
    CHECK(to_json(sigma(double_wheel_graph(8), 7, 8)).dump() == R"({"edge":[7,8],"delta":5,"delta_bar":7,"sigma":2})");
    const Json relp = to_json(solve_relp(complete_graph(4), 1, 2));
    CHECK(relp.at("z") == "3");
    CHECK(relp.at("integral") == true);
}

TEST_CASE("round trips") {
    const auto [r, t] = awer(random_graph(9, 0.5, 3), true);
    CHECK(cover_report_from_json(Json::parse(to_json(r).dump())) == r);
    const CoverReport base = matching_2approx(cycle_graph(5));
    CHECK(cover_report_from_json(to_json(base)) == base);

    const auto lpr = solve_lpr(cycle_graph(5));
    const auto back = relaxation_from_json(Json::parse(to_json(lpr).dump()));
    CHECK(back.kind == lpr.kind);
    CHECK(back.z_value == lpr.z_value);
    CHECK(back.solution.values == lpr.solution.values);
    CHECK(back.solution.tight_rows == lpr.solution.tight_rows);
    const auto relp = solve_relp(cycle_graph(5), 2, 3);
    const auto rb = relaxation_from_json(to_json(relp));
    CHECK(rb.restricted_edge == relp.restricted_edge);
    CHECK(rb.cuts == relp.cuts);

    const SigmaReport s = sigma(double_wheel_graph(10), 9, 10);
    CHECK(sigma_report_from_json(to_json(s)) == s);
    const EdgeClass c{true, true, false};
    CHECK(edge_class_from_json(to_json(c)) == c);
    CHECK_THROWS(rat_from_json(Json(3)));
    CHECK(to_json(t).at("frames").size() == t.frames.size());
}
