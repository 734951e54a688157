#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weakcover/graph.hpp"
#include "weakcover/rational.hpp"

namespace weakcover {

using Assignment = std::map<VertexId, Rat>;

enum class Relation { greater_equal, equal };

struct LpTerm {
    VertexId var = 0;
    Rat coeff;
};

struct LpRow {
    std::vector<LpTerm> terms;
    Relation relation = Relation::greater_equal;
    Rat rhs;

    [[nodiscard]] Rat lhs(const Assignment& x) const;
};

/// min sum_v x_v  subject to the rows and x >= 0.
struct LpProblem {
    VertexSet variables;
    std::vector<LpRow> rows;

    /// Throws std::invalid_argument when a row names an unknown variable or
    /// more than one equality row is present.
    void validate() const;
};

struct LpSolution {
    Assignment values;
    Rat objective;
    std::vector<std::size_t> tight_rows;  ///< rows satisfied with equality
    bool is_basic = false;
};

class LpInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact simplex for covering-type programs.
///
/// The primal has as many rows as edges (plus cuts) but only one column per
/// vertex, so the solver runs the primal simplex with Bland's rule on the dual
///
///     max b'y  s.t.  A'y + s = 1,  y, s >= 0   (equality rows give a split free y)
///
/// whose slack basis is feasible from the start. The simplex multipliers of an
/// optimal dual basis are an optimal basic solution of the primal: each basic
/// dual column names one tight primal constraint and those constraints are
/// linearly independent.
///
/// Rows may be appended after a solve; the previous basis stays dual feasible
/// and solve() continues from it.
class IncrementalLp {
public:
    explicit IncrementalLp(LpProblem problem);

    void add_row(LpRow row);
    /// Pivots to optimality. Throws LpInfeasible if the primal is infeasible.
    LpSolution solve();

    [[nodiscard]] const LpProblem& problem() const { return problem_; }
    [[nodiscard]] std::size_t pivots() const { return pivots_; }

private:
    struct Column {
        std::vector<std::pair<std::size_t, Rat>> entries;  // dense row index -> coefficient
        Rat cost;
        // Same column as small integers, for exact integer pricing.
        bool integral = false;
        std::vector<std::pair<std::size_t, std::int64_t>> int_entries;
        std::int64_t int_cost = 0;
    };

    static void set_integer_form(Column& col);
    [[nodiscard]] int reduced_cost_sign(std::size_t col, const std::vector<Rat>& pi,
                                        const std::optional<ScaledIntegers>& scaled) const;

    void append_columns(const LpRow& row);
    [[nodiscard]] Rat reduced_cost(std::size_t col, const std::vector<Rat>& pi) const;

    LpProblem problem_;
    std::vector<VertexId> ids_;
    std::map<VertexId, std::size_t> index_;
    std::vector<Column> columns_;  // slacks 0..n-1 first, then row columns in insertion order
    std::vector<std::size_t> row_column_;  // first column of each primal row
    std::vector<std::size_t> basis_;
    std::vector<std::vector<Rat>> binv_;
    std::vector<Rat> beta_;
    std::size_t pivots_ = 0;
};

/// Solves the problem from scratch; deterministic for equal inputs.
LpSolution simplex_solve(const LpProblem& p);

/// Rank of the constraint normals that are tight at the solution (rows that
/// hold with equality plus x_v >= 0 bounds at zero). A solution is a basic
/// feasible solution exactly when this equals the number of variables.
std::size_t tight_constraint_rank(const LpProblem& p, const Assignment& x);

/// True when x satisfies every row and bound of p exactly.
bool is_feasible(const LpProblem& p, const Assignment& x);

/// Simple odd cycle v_0 .. v_{2s}; consecutive vertices and (v_{2s}, v_0) are edges.
struct OddCycle {
    std::vector<VertexId> vertices;

    [[nodiscard]] int s() const { return static_cast<int>(vertices.size() - 1) / 2; }
    /// sum_{v in cycle} x_v >= s + 1
    [[nodiscard]] LpRow row() const;

    friend bool operator==(const OddCycle&, const OddCycle&) = default;
};

/// Rotation starting at the smallest id, oriented so the second entry is the
/// smaller of its two neighbours.
OddCycle canonical_cycle(std::vector<VertexId> cycle);

/// Edge rows x_u + x_v >= 1 for g. With `equality`, that edge's row is
/// replaced by x_r + x_s = 1.
LpProblem edge_problem(const Graph& g, std::optional<Edge> equality = std::nullopt);

/// Finds a violated odd-cycle inequality at an edge-feasible point.
///
/// Edge (u, v) gets weight x_u + x_v - 1 >= 0, so a cycle is violated exactly
/// when its weight is below 1. A shortest odd closed walk through every vertex
/// is found by Dijkstra on the parity double cover, then cut at repeated
/// vertices down to a simple odd cycle of no greater weight. Among the
/// candidates the cycle of least weight wins, ties by canonical vertex list.
/// Throws std::invalid_argument if some edge row is violated at x.
std::optional<OddCycle> separate_odd_cycle(const Graph& g, const Assignment& x);

struct CuttingPlaneResult {
    LpSolution solution;
    std::vector<OddCycle> cuts;
    LpProblem final_problem;
};

/// Solves edge_problem(g, equality) plus every odd-cycle inequality by adding
/// one separated cut per round until separation finds nothing.
CuttingPlaneResult cutting_plane_solve(const Graph& g, std::optional<Edge> equality = std::nullopt);

}  // namespace weakcover
