#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "weakcover/graph.hpp"
#include "weakcover/lp.hpp"

namespace weakcover {

enum class RelaxationKind { lpr, elp, relp };

std::string_view relaxation_name(RelaxationKind k);

struct RelaxationResult {
    RelaxationKind kind = RelaxationKind::lpr;
    LpSolution solution;
    std::optional<Edge> restricted_edge;  ///< set iff kind == relp
    Rat z_value;                          ///< equals solution.objective
    std::size_t cuts = 0;                 ///< odd-cycle cuts generated (ELP/RELP)
};

/// Edge relaxation; every component of the returned basic solution is 0, 1/2 or 1.
RelaxationResult solve_lpr(const Graph& g);
/// Edge relaxation strengthened by all odd-cycle inequalities.
RelaxationResult solve_elp(const Graph& g);
/// ELP with the (r, s) edge row replaced by x_r + x_s = 1; z_value is Z(r, s).
RelaxationResult solve_relp(const Graph& g, VertexId r, VertexId s);

struct RestrictedScan {
    Edge edge;
    Rat z;
    LpSolution solution;
    std::vector<std::pair<Edge, Rat>> all_z;  ///< Z(i, j) for every edge, lexicographic
};

/// Minimises Z(i, j) over all edges; ties go to the lexicographically smallest edge.
RestrictedScan best_restricted_edge(const Graph& g);

/// Edges with x_i + x_j = 1, lexicographic.
std::vector<Edge> active_edges(const Graph& g, const Assignment& x);

/// Weak-edge heuristic: the minimising edge of best_restricted_edge, which is
/// active in its own RELP solution.
Edge almost_weak(const Graph& g);

}  // namespace weakcover
