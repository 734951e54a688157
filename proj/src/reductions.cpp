#include "weakcover/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "weakcover/relaxations.hpp"

namespace weakcover {

ZeroOneReduction zero_one_reduce(const Graph& g) {
    ZeroOneReduction out;
    if (g.empty()) return out;
    const auto lpr = solve_lpr(g);
    for (const auto& [v, x] : lpr.solution.values) {
        if (x.is_zero()) {
            out.i0.insert(v);
        } else if (x == Rat(1)) {
            out.i1.insert(v);
        }
    }
    VertexSet fixed = out.i0;
    fixed.insert(out.i1.begin(), out.i1.end());
    out.reduced = delete_vertices(g, fixed);
    return out;
}

EdgeReduction weak_edge_reduce(const Graph& g, VertexId i, VertexId j) {
    if (!g.has_edge(i, j)) {
        throw GraphError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
    }
    auto sets = reduction_sets(g, i, j);

    VertexSet removed = sets.delta;
    removed.insert(i);
    removed.insert(j);
    VertexSet keep;
    for (VertexId v : g.vertices())
        if (!removed.count(v)) keep.insert(v);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!removed.count(e.u) && !removed.count(e.v)) edges.push_back(e);
    for (VertexId s : sets.d_i)
        for (VertexId t : sets.d_j) edges.emplace_back(s, t);

    EdgeReduction out{Graph(std::move(keep), edges), {}};
    out.frame.weak_pair = Edge{};
    out.frame.weak_pair->u = i;
    out.frame.weak_pair->v = j;
    out.frame.delta = std::move(sets.delta);
    out.frame.d_i = std::move(sets.d_i);
    out.frame.reduced = out.reduced;
    return out;
}

VertexSet reconstruct(const ReductionFrame& frame, const VertexSet& r) {
    if (!is_vertex_cover(frame.reduced, r)) {
        throw std::logic_error("reconstruct: the given set does not cover the reduced graph");
    }
    VertexSet out = r;
    if (frame.weak_pair) {
        out.insert(frame.delta.begin(), frame.delta.end());
        const bool private_covered =
            std::includes(r.begin(), r.end(), frame.d_i.begin(), frame.d_i.end());
        out.insert(private_covered ? frame.j() : frame.i());
    }
    out.insert(frame.i1.begin(), frame.i1.end());
    return out;
}

}  // namespace weakcover
