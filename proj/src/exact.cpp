#include "weakcover/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weakcover {

namespace {

using Mask = std::uint64_t;

Mask bit(int k) { return Mask{1} << k; }

class Search {
public:
    Search(const Graph& g, std::size_t limit) {
        if (g.num_vertices() > limit || g.num_vertices() > kMaxExactVertices) {
            throw ExactLimitError("exact search limited to " + std::to_string(std::min(limit, kMaxExactVertices)) +
                                  " vertices, graph has " + std::to_string(g.num_vertices()));
        }
        const VertexSet verts = g.vertices();
        ids_.assign(verts.begin(), verts.end());
        n_ = static_cast<int>(ids_.size());
        std::map<VertexId, int> index;
        for (int k = 0; k < n_; ++k) index.emplace(ids_[k], k);
        adj_.assign(n_, 0);
        for (int k = 0; k < n_; ++k)
            for (VertexId w : g.neighbors(ids_[k])) adj_[k] |= bit(index.at(w));
        full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    }

    [[nodiscard]] int index_of(VertexId v) const {
        for (int k = 0; k < n_; ++k)
            if (ids_[k] == v) return k;
        throw GraphError("unknown vertex " + std::to_string(v));
    }
    [[nodiscard]] Mask full() const { return full_; }
    [[nodiscard]] Mask neighbors(int k) const { return adj_[k]; }

    /// Minimum cover of the subgraph induced by `alive`, as a mask.
    Mask solve(Mask alive) {
        best_size_ = std::popcount(alive) + 1;
        best_ = alive;
        branch(alive, 0);
        return best_;
    }

    [[nodiscard]] VertexSet to_set(Mask m) const {
        VertexSet out;
        for (int k = 0; k < n_; ++k)
            if (m & bit(k)) out.insert(ids_[k]);
        return out;
    }

private:
    void branch(Mask alive, Mask chosen) {
        // Drop isolated vertices.
        for (Mask rest = alive; rest;) {
            const int k = std::countr_zero(rest);
            rest &= rest - 1;
            if (!(adj_[k] & alive)) alive &= ~bit(k);
        }
        const int size = std::popcount(chosen);
        if (!alive) {
            if (size < best_size_) {
                best_size_ = size;
                best_ = chosen;
            }
            return;
        }
        if (size + lower_bound(alive) >= best_size_) return;

        int v = -1;
        int v_deg = -1;
        for (Mask rest = alive; rest;) {
            const int k = std::countr_zero(rest);
            rest &= rest - 1;
            const int d = std::popcount(adj_[k] & alive);
            if (d > v_deg) {
                v = k;
                v_deg = d;
            }
        }
        branch(alive & ~bit(v), chosen | bit(v));
        const Mask nv = adj_[v] & alive;
        branch(alive & ~nv & ~bit(v), chosen | nv);
    }

    int lower_bound(Mask alive) const {
        int greedy = 0;
        Mask free = alive;
        for (Mask rest = alive; rest;) {
            const int k = std::countr_zero(rest);
            rest &= rest - 1;
            if (!(free & bit(k))) continue;
            const Mask cand = adj_[k] & free;
            if (!cand) continue;
            free &= ~(bit(k) | bit(std::countr_zero(cand)));
            ++greedy;
        }
        // LPR value = (maximum matching of the bipartite double cover) / 2.
        std::vector<int> match_right(n_, -1);
        int matched = 0;
        for (Mask rest = alive; rest;) {
            const int k = std::countr_zero(rest);
            rest &= rest - 1;
            Mask seen = 0;
            if (augment(k, alive, seen, match_right)) ++matched;
        }
        return std::max(greedy, (matched + 1) / 2);
    }

    bool augment(int left, Mask alive, Mask& seen, std::vector<int>& match_right) const {
        for (Mask rest = adj_[left] & alive & ~seen; rest; rest &= ~seen) {
            const int r = std::countr_zero(rest);
            seen |= bit(r);
            if (match_right[r] < 0 || augment(match_right[r], alive, seen, match_right)) {
                match_right[r] = left;
                return true;
            }
        }
        return false;
    }

    std::vector<VertexId> ids_;
    int n_ = 0;
    std::vector<Mask> adj_;
    Mask full_ = 0;
    int best_size_ = 0;
    Mask best_ = 0;
};

void require_edge(const Graph& g, VertexId i, VertexId j) {
    if (!g.has_edge(i, j)) {
        throw GraphError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
    }
}

}  // namespace

VertexSet exact_vc(const Graph& g, std::size_t limit) {
    Search s(g, limit);
    return s.to_set(s.solve(s.full()));
}

RestrictedCover exact_restricted_vc(const Graph& g, VertexId i, VertexId j, std::size_t limit) {
    require_edge(g, i, j);
    Search s(g, limit);
    const int a = s.index_of(i);
    const int b = s.index_of(j);
    // Keep one endpoint, drop the other: the dropped one's neighbourhood is forced in.
    auto forced = [&](int dropped) {
        const Mask nd = s.neighbors(dropped);
        return nd | s.solve(s.full() & ~nd & ~bit(dropped));
    };
    const Mask keep_i = forced(b);
    const Mask keep_j = forced(a);
    const Mask best = std::popcount(keep_j) < std::popcount(keep_i) ? keep_j : keep_i;
    return {s.to_set(best), static_cast<std::size_t>(std::popcount(best))};
}

SigmaReport sigma(const Graph& g, VertexId i, VertexId j, std::size_t limit) {
    require_edge(g, i, j);
    SigmaReport out;
    out.edge = Edge(i, j);
    out.delta = exact_vc(g, limit).size();
    out.delta_bar = exact_restricted_vc(g, i, j, limit).delta_bar;
    out.sigma = out.delta_bar - out.delta;
    return out;
}

EdgeClass classify_edge(const Graph& g, VertexId i, VertexId j, std::size_t limit) {
    const SigmaReport rep = sigma(g, i, j, limit);
    Search s(g, limit);
    const Mask both = bit(s.index_of(i)) | bit(s.index_of(j));
    const int with_both = 2 + std::popcount(s.solve(s.full() & ~both));
    EdgeClass out;
    out.weak = rep.sigma == 0;
    out.strong = static_cast<std::size_t>(with_both) == rep.delta;
    out.uniformly_strong = !out.weak;
    return out;
}

Edge find_weak_edge(const Graph& g, std::size_t limit) {
    const auto edges = g.edges();
    if (edges.empty()) throw GraphError("a weak edge needs at least one edge");
    const std::size_t delta = exact_vc(g, limit).size();
    for (const Edge& e : edges)
        if (exact_restricted_vc(g, e.u, e.v, limit).delta_bar == delta) return e;
    throw std::logic_error("no weak edge found; every graph with an edge has one");
}

}  // namespace weakcover
