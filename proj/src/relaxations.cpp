#include "weakcover/relaxations.hpp"

#include <stdexcept>
#include <string>

namespace weakcover {

std::string_view relaxation_name(RelaxationKind k) {
    switch (k) {
        case RelaxationKind::lpr: return "LPR";
        case RelaxationKind::elp: return "ELP";
        case RelaxationKind::relp: return "RELP";
    }
    return "?";
}

RelaxationResult solve_lpr(const Graph& g) {
    RelaxationResult out;
    out.kind = RelaxationKind::lpr;
    out.solution = simplex_solve(edge_problem(g));
    out.z_value = out.solution.objective;
    return out;
}

RelaxationResult solve_elp(const Graph& g) {
    auto cp = cutting_plane_solve(g);
    RelaxationResult out;
    out.kind = RelaxationKind::elp;
    out.solution = std::move(cp.solution);
    out.z_value = out.solution.objective;
    out.cuts = cp.cuts.size();
    return out;
}

RelaxationResult solve_relp(const Graph& g, VertexId r, VertexId s) {
    if (!g.has_edge(r, s)) {
        throw GraphError("RELP needs an edge, (" + std::to_string(r) + "," + std::to_string(s) + ") is not one");
    }
    const Edge e(r, s);
    auto cp = cutting_plane_solve(g, e);
    RelaxationResult out;
    out.kind = RelaxationKind::relp;
    out.solution = std::move(cp.solution);
    out.restricted_edge = e;
    out.z_value = out.solution.objective;
    out.cuts = cp.cuts.size();
    return out;
}

RestrictedScan best_restricted_edge(const Graph& g) {
    const auto edges = g.edges();
    if (edges.empty()) throw GraphError("restricted-edge scan needs at least one edge");
    std::optional<RestrictedScan> best;
    std::vector<std::pair<Edge, Rat>> all;
    for (const Edge& e : edges) {
        auto res = solve_relp(g, e.u, e.v);
        all.emplace_back(e, res.z_value);
        if (!best || res.z_value < best->z) {
            best = RestrictedScan{e, res.z_value, std::move(res.solution), {}};
        }
    }
    best->all_z = std::move(all);
    return std::move(*best);
}

std::vector<Edge> active_edges(const Graph& g, const Assignment& x) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (x.at(e.u) + x.at(e.v) == Rat(1)) out.push_back(e);
    return out;
}

Edge almost_weak(const Graph& g) { return best_restricted_edge(g).edge; }

}  // namespace weakcover
