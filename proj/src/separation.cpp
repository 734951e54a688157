#include "weakcover/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace weakcover {

LpRow OddCycle::row() const {
    LpRow r;
    for (VertexId v : vertices) r.terms.push_back({v, Rat(1)});
    r.relation = Relation::greater_equal;
    r.rhs = s() + 1;
    return r;
}

OddCycle canonical_cycle(std::vector<VertexId> cycle) {
    if (cycle.empty()) return {};
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return OddCycle{std::move(cycle)};
}

namespace {

// Splits a closed walk (given cyclically, without repeating the start) at its
// first repeated vertex and keeps the odd part until no vertex repeats.
std::vector<VertexId> simple_odd_part(std::vector<VertexId> seq) {
    for (;;) {
        std::map<VertexId, std::size_t> seen;
        std::optional<std::pair<std::size_t, std::size_t>> repeat;
        for (std::size_t j = 0; j < seq.size(); ++j) {
            auto [it, fresh] = seen.emplace(seq[j], j);
            if (!fresh) {
                repeat = {{it->second, j}};
                break;
            }
        }
        if (!repeat) return seq;
        const auto [i, j] = *repeat;
        if ((j - i) % 2 == 1) {
            seq = std::vector<VertexId>(seq.begin() + static_cast<std::ptrdiff_t>(i),
                                        seq.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
            std::vector<VertexId> outer(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
            outer.insert(outer.end(), seq.begin() + static_cast<std::ptrdiff_t>(j), seq.end());
            seq = std::move(outer);
        }
    }
}

template <class W>
using WeightedAdjacency = std::vector<std::vector<std::pair<std::size_t, W>>>;

// W is either Rat, or int64 after scaling every weight by a common
// denominator; `one` is the scaled value of 1.
template <class W>
std::optional<OddCycle> shortest_violated_cycle(const std::vector<VertexId>& ids, const WeightedAdjacency<W>& adj,
                                                const W& one) {
    const std::size_t n = ids.size();
    std::map<VertexId, std::size_t> index;
    for (std::size_t k = 0; k < n; ++k) index.emplace(ids[k], k);
    std::vector<W> weight_of(n * n, W(0));
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [l, w] : adj[k]) weight_of[k * n + l] = w;

    std::optional<W> best_weight;
    std::optional<OddCycle> best;
    const std::size_t nodes = 2 * n;  // node 2k + parity
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<std::optional<W>> dist(nodes);
        std::vector<std::size_t> pred(nodes, nodes);
        std::vector<char> done(nodes, 0);
        dist[2 * src] = W(0);
        const std::size_t target = 2 * src + 1;
        for (;;) {
            std::optional<std::size_t> cur;
            for (std::size_t v = 0; v < nodes; ++v) {
                if (done[v] || !dist[v]) continue;
                if (!cur || *dist[v] < *dist[*cur]) cur = v;
            }
            if (!cur || *cur == target) break;
            done[*cur] = 1;
            // Walks of weight >= 1 cannot certify a violation, and walks heavier
            // than the best cycle so far cannot beat or tie it.
            if (*dist[*cur] >= one || (best_weight && *dist[*cur] > *best_weight)) break;
            const std::size_t k = *cur / 2;
            const std::size_t parity = *cur % 2;
            for (const auto& [l, w] : adj[k]) {
                const std::size_t next = 2 * l + (1 - parity);
                if (done[next]) continue;
                W cand = *dist[*cur] + w;
                if (!dist[next] || cand < *dist[next]) {
                    dist[next] = std::move(cand);
                    pred[next] = *cur;
                }
            }
        }
        if (!dist[target] || *dist[target] >= one) continue;

        std::vector<VertexId> walk;
        for (std::size_t v = target; v != 2 * src; v = pred[v]) walk.push_back(ids[v / 2]);
        std::reverse(walk.begin(), walk.end());  // starts after src, ends at src
        OddCycle cycle = canonical_cycle(simple_odd_part(std::move(walk)));

        W weight(0);
        for (std::size_t a = 0; a < cycle.vertices.size(); ++a) {
            const std::size_t u = index.at(cycle.vertices[a]);
            const std::size_t v = index.at(cycle.vertices[(a + 1) % cycle.vertices.size()]);
            weight += weight_of[u * n + v];
        }
        if (weight >= one) continue;
        if (!best || weight < *best_weight || (weight == *best_weight && cycle.vertices < best->vertices)) {
            best_weight = weight;
            best = std::move(cycle);
        }
    }
    return best;
}

}  // namespace

std::optional<OddCycle> separate_odd_cycle(const Graph& g, const Assignment& x) {
    const VertexSet verts = g.vertices();
    const std::vector<VertexId> ids(verts.begin(), verts.end());
    std::map<VertexId, std::size_t> index;
    std::vector<Rat> xs;
    xs.reserve(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        index.emplace(ids[k], k);
        xs.push_back(x.at(ids[k]));
    }
    const auto edges = g.edges();
    auto violated_edge = [](const Edge& e) {
        return std::invalid_argument("separation called at a point violating edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ")");
    };

    // Path sums stay below 2 * nodes * 2^40, far inside int64.
    if (const auto scaled = scale_to_common_denominator(xs, std::int64_t{1} << 40)) {
        WeightedAdjacency<std::int64_t> adj(ids.size());
        for (const Edge& e : edges) {
            const std::size_t u = index.at(e.u);
            const std::size_t v = index.at(e.v);
            const std::int64_t w = scaled->nums[u] + scaled->nums[v] - scaled->den;
            if (w < 0) throw violated_edge(e);
            adj[u].emplace_back(v, w);
            adj[v].emplace_back(u, w);
        }
        return shortest_violated_cycle<std::int64_t>(ids, adj, scaled->den);
    }
    WeightedAdjacency<Rat> adj(ids.size());
    for (const Edge& e : edges) {
        const std::size_t u = index.at(e.u);
        const std::size_t v = index.at(e.v);
        Rat w = xs[u] + xs[v] - 1;
        if (w.sign() < 0) throw violated_edge(e);
        adj[u].emplace_back(v, w);
        adj[v].emplace_back(u, std::move(w));
    }
    return shortest_violated_cycle<Rat>(ids, adj, Rat(1));
}

CuttingPlaneResult cutting_plane_solve(const Graph& g, std::optional<Edge> equality) {
    IncrementalLp lp(edge_problem(g, equality));
    CuttingPlaneResult out;
    for (;;) {
        out.solution = lp.solve();
        auto cut = separate_odd_cycle(g, out.solution.values);
        if (!cut) break;
        lp.add_row(cut->row());
        out.cuts.push_back(std::move(*cut));
    }
    out.final_problem = lp.problem();
    return out;
}

}  // namespace weakcover
