#include "weakcover/brute.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>

namespace weakcover {

namespace {

struct Masks {
    std::vector<VertexId> ids;
    std::map<VertexId, int> index;
    std::vector<std::uint32_t> edges;  // one two-bit mask per edge
};

Masks masks_of(const Graph& g) {
    if (g.num_vertices() > kBruteLimit) {
        throw std::invalid_argument("brute force limited to " + std::to_string(kBruteLimit) + " vertices");
    }
    Masks m;
    const VertexSet verts = g.vertices();
    m.ids.assign(verts.begin(), verts.end());
    for (int k = 0; k < static_cast<int>(m.ids.size()); ++k) m.index.emplace(m.ids[k], k);
    for (const Edge& e : g.edges()) m.edges.push_back((1u << m.index.at(e.u)) | (1u << m.index.at(e.v)));
    return m;
}

bool covers(const Masks& m, std::uint32_t s) {
    for (std::uint32_t e : m.edges)
        if (!(s & e)) return false;
    return true;
}

std::size_t smallest(const Masks& m, const std::function<bool(std::uint32_t)>& allowed) {
    const std::uint32_t total = std::uint32_t{1} << m.ids.size();
    int best = static_cast<int>(m.ids.size()) + 1;
    for (std::uint32_t s = 0; s < total; ++s) {
        const int size = std::popcount(s);
        if (size < best && allowed(s) && covers(m, s)) best = size;
    }
    return static_cast<std::size_t>(best);
}

}  // namespace

std::size_t brute_vc_size(const Graph& g) {
    const auto m = masks_of(g);
    return smallest(m, [](std::uint32_t) { return true; });
}

std::size_t brute_restricted_size(const Graph& g, VertexId i, VertexId j) {
    const auto m = masks_of(g);
    const std::uint32_t a = 1u << m.index.at(i);
    const std::uint32_t b = 1u << m.index.at(j);
    return smallest(m, [a, b](std::uint32_t s) { return ((s & a) != 0) != ((s & b) != 0); });
}

std::size_t brute_both_size(const Graph& g, VertexId i, VertexId j) {
    const auto m = masks_of(g);
    const std::uint32_t ab = (1u << m.index.at(i)) | (1u << m.index.at(j));
    return smallest(m, [ab](std::uint32_t s) { return (s & ab) == ab; });
}

void for_each_simple_odd_cycle(const Graph& g, const std::function<void(const std::vector<VertexId>&)>& visit) {
    std::vector<VertexId> path;
    VertexSet on_path;
    // Paths start at their smallest vertex; each cycle is seen in both
    // directions, so keep the one whose second entry is smaller than its last.
    std::function<void(VertexId)> extend = [&](VertexId v) {
        const VertexId start = path.front();
        for (VertexId w : g.neighbors(v)) {
            if (w == start && path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back()) visit(path);
            if (w <= start || on_path.count(w)) continue;
            path.push_back(w);
            on_path.insert(w);
            extend(w);
            on_path.erase(w);
            path.pop_back();
        }
    };
    const VertexSet verts = g.vertices();
    for (VertexId s : verts) {
        path = {s};
        on_path = {s};
        extend(s);
    }
}

std::optional<BruteCycle> brute_violated_cycle(const Graph& g, const Assignment& x) {
    std::optional<BruteCycle> best;
    for_each_simple_odd_cycle(g, [&](const std::vector<VertexId>& c) {
        Rat w;
        for (std::size_t k = 0; k < c.size(); ++k) w += x.at(c[k]) + x.at(c[(k + 1) % c.size()]) - Rat(1);
        if (w >= Rat(1)) return;
        if (!best || w < best->weight || (w == best->weight && c < best->vertices)) best = BruteCycle{c, w};
    });
    return best;
}

}  // namespace weakcover
