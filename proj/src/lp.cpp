#include "weakcover/lp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace weakcover {

Rat LpRow::lhs(const Assignment& x) const {
    Rat sum;
    for (const auto& t : terms) sum += t.coeff * x.at(t.var);
    return sum;
}

void LpProblem::validate() const {
    int equalities = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& t : rows[r].terms) {
            if (!variables.count(t.var)) {
                throw std::invalid_argument("row " + std::to_string(r) + " references unknown variable " +
                                            std::to_string(t.var));
            }
        }
        if (rows[r].relation == Relation::equal) ++equalities;
    }
    if (equalities > 1) throw std::invalid_argument("at most one equality row is supported");
}

IncrementalLp::IncrementalLp(LpProblem problem) : problem_(std::move(problem)) {
    problem_.validate();
    ids_.assign(problem_.variables.begin(), problem_.variables.end());
    const std::size_t n = ids_.size();
    for (std::size_t k = 0; k < n; ++k) index_.emplace(ids_[k], k);

    for (std::size_t k = 0; k < n; ++k) {
        Column slack;
        slack.entries = {{k, Rat(1)}};
        set_integer_form(slack);
        columns_.push_back(std::move(slack));
    }
    for (const auto& row : problem_.rows) append_columns(row);

    basis_.resize(n);
    binv_.assign(n, std::vector<Rat>(n));
    beta_.assign(n, Rat(1));
    for (std::size_t k = 0; k < n; ++k) {
        basis_[k] = k;
        binv_[k][k] = 1;
    }
}

void IncrementalLp::append_columns(const LpRow& row) {
    std::map<std::size_t, Rat> merged;
    for (const auto& t : row.terms) merged[index_.at(t.var)] += t.coeff;
    row_column_.push_back(columns_.size());
    Column col;
    for (auto& [k, a] : merged)
        if (!a.is_zero()) col.entries.emplace_back(k, a);
    col.cost = row.rhs;
    set_integer_form(col);
    if (row.relation == Relation::equal) {
        Column neg;
        for (const auto& [k, a] : col.entries) neg.entries.emplace_back(k, -a);
        neg.cost = -row.rhs;
        set_integer_form(neg);
        columns_.push_back(std::move(col));
        columns_.push_back(std::move(neg));
    } else {
        columns_.push_back(std::move(col));
    }
}

void IncrementalLp::add_row(LpRow row) {
    problem_.rows.push_back(std::move(row));
    try {
        problem_.validate();
    } catch (...) {
        problem_.rows.pop_back();
        throw;
    }
    append_columns(problem_.rows.back());
}

namespace {
constexpr std::int64_t kIntCoeffLimit = std::int64_t{1} << 20;
constexpr std::int64_t kScaleLimit = std::int64_t{1} << 40;

bool small_integer(const Rat& r, std::int64_t& out) {
    const auto parts = r.small_parts();
    if (!parts || parts->second != 1 || parts->first >= kIntCoeffLimit || parts->first <= -kIntCoeffLimit) {
        return false;
    }
    out = parts->first;
    return true;
}
}  // namespace

void IncrementalLp::set_integer_form(Column& col) {
    col.integral = false;
    col.int_entries.clear();
    if (!small_integer(col.cost, col.int_cost)) return;
    for (const auto& [k, a] : col.entries) {
        std::int64_t v = 0;
        if (!small_integer(a, v)) return;
        col.int_entries.emplace_back(k, v);
    }
    col.integral = true;
}

int IncrementalLp::reduced_cost_sign(std::size_t col, const std::vector<Rat>& pi,
                                     const std::optional<ScaledIntegers>& scaled) const {
    const Column& c = columns_[col];
    if (scaled && c.integral) {
        // sign(cost - a.pi) == sign(cost * den - a.nums), den > 0
        __int128 d = static_cast<__int128>(c.int_cost) * scaled->den;
        for (const auto& [k, a] : c.int_entries) d -= static_cast<__int128>(a) * scaled->nums[k];
        return (d > 0) - (d < 0);
    }
    return reduced_cost(col, pi).sign();
}

Rat IncrementalLp::reduced_cost(std::size_t col, const std::vector<Rat>& pi) const {
    Rat d = columns_[col].cost;
    for (const auto& [k, a] : columns_[col].entries) d -= a * pi[k];
    return d;
}

LpSolution IncrementalLp::solve() {
    const std::size_t n = ids_.size();
    std::vector<Rat> u(n);
    // Simplex multipliers pi = c_B B^-1; kept current across pivots.
    std::vector<Rat> pi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rat& c = columns_[basis_[i]].cost;
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
            if (!binv_[i][k].is_zero()) pi[k] += c * binv_[i][k];
    }
    for (;;) {
        const auto scaled = scale_to_common_denominator(pi, kScaleLimit);

        // Bland: first improving column.
        std::optional<std::size_t> entering;
        for (std::size_t col = 0; col < columns_.size(); ++col) {
            if (reduced_cost_sign(col, pi, scaled) > 0) {
                entering = col;
                break;
            }
        }
        if (!entering) break;
        const Rat entering_cost = reduced_cost(*entering, pi);

        for (std::size_t i = 0; i < n; ++i) {
            Rat s;
            for (const auto& [k, a] : columns_[*entering].entries)
                if (!binv_[i][k].is_zero()) s += binv_[i][k] * a;
            u[i] = s;
        }
        std::optional<std::size_t> leave;
        Rat best;
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i].sign() <= 0) continue;
            Rat ratio = beta_[i] / u[i];
            if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        if (!leave) throw LpInfeasible("linear program is infeasible (dual unbounded)");

        const std::size_t p = *leave;
        const Rat piv = u[p];
        for (auto& v : binv_[p]) v /= piv;
        beta_[p] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || u[i].is_zero()) continue;
            const Rat f = u[i];
            for (std::size_t k = 0; k < n; ++k)
                if (!binv_[p][k].is_zero()) binv_[i][k] -= f * binv_[p][k];
            beta_[i] -= f * beta_[p];
        }
        for (std::size_t k = 0; k < n; ++k)
            if (!binv_[p][k].is_zero()) pi[k] += entering_cost * binv_[p][k];
        basis_[p] = *entering;
        ++pivots_;
    }

    LpSolution sol;
    for (std::size_t k = 0; k < n; ++k) {
        sol.values.emplace(ids_[k], pi[k]);
        sol.objective += pi[k];
    }
    Rat dual_objective;
    for (std::size_t i = 0; i < n; ++i) dual_objective += columns_[basis_[i]].cost * beta_[i];
    if (dual_objective != sol.objective) throw std::logic_error("simplex: primal and dual objectives disagree");
    // A row is tight exactly when its dual column has zero reduced cost.
    const auto scaled = scale_to_common_denominator(pi, kScaleLimit);
    for (std::size_t r = 0; r < problem_.rows.size(); ++r)
        if (reduced_cost_sign(row_column_[r], pi, scaled) == 0) sol.tight_rows.push_back(r);
    sol.is_basic = true;
    return sol;
}

LpSolution simplex_solve(const LpProblem& p) { return IncrementalLp(p).solve(); }

bool is_feasible(const LpProblem& p, const Assignment& x) {
    for (VertexId v : p.variables) {
        auto it = x.find(v);
        if (it == x.end() || it->second.sign() < 0) return false;
    }
    for (const auto& row : p.rows) {
        const Rat lhs = row.lhs(x);
        if (row.relation == Relation::equal ? lhs != row.rhs : lhs < row.rhs) return false;
    }
    return true;
}

std::size_t tight_constraint_rank(const LpProblem& p, const Assignment& x) {
    std::vector<VertexId> ids(p.variables.begin(), p.variables.end());
    std::map<VertexId, std::size_t> index;
    for (std::size_t k = 0; k < ids.size(); ++k) index.emplace(ids[k], k);

    std::vector<std::vector<Rat>> m;
    for (const auto& row : p.rows) {
        if (row.lhs(x) != row.rhs) continue;
        std::vector<Rat> r(ids.size());
        for (const auto& t : row.terms) r[index.at(t.var)] += t.coeff;
        m.push_back(std::move(r));
    }
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (!x.at(ids[k]).is_zero()) continue;
        std::vector<Rat> r(ids.size());
        r[k] = 1;
        m.push_back(std::move(r));
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < ids.size() && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col].is_zero()) continue;
            const Rat f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < ids.size(); ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

LpProblem edge_problem(const Graph& g, std::optional<Edge> equality) {
    if (equality && !g.has_edge(equality->u, equality->v)) {
        throw std::invalid_argument("equality row must name an edge of the graph");
    }
    LpProblem p;
    p.variables = g.vertices();
    for (const Edge& e : g.edges()) {
        LpRow row;
        row.terms = {{e.u, Rat(1)}, {e.v, Rat(1)}};
        row.rhs = 1;
        row.relation = (equality && *equality == e) ? Relation::equal : Relation::greater_equal;
        p.rows.push_back(std::move(row));
    }
    return p;
}

}  // namespace weakcover
