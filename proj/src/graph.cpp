#include "weakcover/graph.hpp"

#include <random>
#include <sstream>
#include <string>

namespace weakcover {

Graph::Graph(VertexSet vertices, const std::vector<Edge>& edges) {
    for (VertexId v : vertices) adj_.emplace(v, VertexSet{});
    for (const Edge& e : edges) {
        if (e.u == e.v) throw GraphError("self-loop on vertex " + std::to_string(e.u));
        auto a = adj_.find(e.u);
        auto b = adj_.find(e.v);
        if (a == adj_.end() || b == adj_.end()) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") references an unknown vertex");
        }
        if (a->second.insert(e.v).second) {
            b->second.insert(e.u);
            ++num_edges_;
        }
    }
}

VertexSet Graph::vertices() const {
    VertexSet out;
    for (const auto& [v, _] : adj_) out.insert(out.end(), v);
    return out;
}

const VertexSet& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw GraphError("unknown vertex " + std::to_string(v));
    return it->second;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) != 0;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (const auto& [u, nbrs] : adj_) {
        for (auto it = nbrs.upper_bound(u); it != nbrs.end(); ++it) out.emplace_back(u, *it);
    }
    return out;
}

Family parse_family(std::string_view name) {
    if (name == "complete") return Family::complete;
    if (name == "cycle") return Family::cycle;
    if (name == "wheel") return Family::wheel;
    if (name == "double_wheel" || name == "double-wheel") return Family::double_wheel;
    if (name == "random") return Family::random;
    throw std::invalid_argument("unknown graph family: " + std::string(name));
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::wheel: return "wheel";
        case Family::double_wheel: return "double_wheel";
        case Family::random: return "random";
    }
    return "unknown";
}

namespace {

VertexSet range_set(int first, int last) {
    VertexSet s;
    for (int v = first; v <= last; ++v) s.insert(s.end(), v);
    return s;
}

void require_min(int n, int min, std::string_view family) {
    if (n < min) {
        throw std::invalid_argument(std::string(family) + " graph needs n >= " + std::to_string(min) +
                                    ", got " + std::to_string(n));
    }
}

void add_cycle(std::vector<Edge>& edges, int len) {
    for (int v = 1; v < len; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(len, 1);
}

}  // namespace

Graph complete_graph(int n) {
    require_min(n, 1, "complete");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(range_set(1, n), edges);
}

Graph cycle_graph(int n) {
    require_min(n, 3, "cycle");
    std::vector<Edge> edges;
    add_cycle(edges, n);
    return Graph(range_set(1, n), edges);
}

Graph wheel_graph(int n) {
    require_min(n, 4, "wheel");
    std::vector<Edge> edges;
    add_cycle(edges, n - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(v, n);
    return Graph(range_set(1, n), edges);
}

Graph double_wheel_graph(int n) {
    require_min(n, 5, "double_wheel");
    std::vector<Edge> edges;
    add_cycle(edges, n - 2);
    for (int v = 1; v <= n - 2; ++v) {
        edges.emplace_back(v, n - 1);
        edges.emplace_back(v, n);
    }
    edges.emplace_back(n - 1, n);
    return Graph(range_set(1, n), edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    require_min(n, 1, "random");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            // 53 high bits -> uniform double in [0, 1), identical on every platform.
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, j);
        }
    }
    return Graph(range_set(1, n), edges);
}

Graph gen_family(Family family, int n, std::optional<double> p, std::optional<std::uint64_t> seed) {
    switch (family) {
        case Family::complete: return complete_graph(n);
        case Family::cycle: return cycle_graph(n);
        case Family::wheel: return wheel_graph(n);
        case Family::double_wheel: return double_wheel_graph(n);
        case Family::random:
            if (!p || !seed) throw std::invalid_argument("random family needs both p and seed");
            return random_graph(n, *p, *seed);
    }
    throw std::invalid_argument("unknown graph family");
}

ReductionSets reduction_sets(const Graph& g, VertexId i, VertexId j) {
    if (!g.has_edge(i, j)) {
        throw GraphError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
    }
    const VertexSet& ni = g.neighbors(i);
    const VertexSet& nj = g.neighbors(j);
    ReductionSets out;
    for (VertexId k : ni) {
        if (k == j) continue;
        if (nj.count(k)) out.delta.insert(k);
        else out.d_i.insert(k);
    }
    for (VertexId k : nj) {
        if (k != i && !out.delta.count(k)) out.d_j.insert(k);
    }
    return out;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (const Edge& e : g.edges()) {
        if (!s.count(e.u) && !s.count(e.v)) return false;
    }
    return true;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
    VertexSet keep;
    for (VertexId v : g.vertices())
        if (!s.count(v)) keep.insert(keep.end(), v);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (keep.count(e.u) && keep.count(e.v)) edges.push_back(e);
    return Graph(std::move(keep), edges);
}

namespace {

long parse_int(const std::string& tok, int line_no) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) {
        throw DimacsError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    }
    return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<long> n;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind == "c") continue;
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (kind == "p") {
            if (n) throw DimacsError("line " + std::to_string(line_no) + ": duplicate problem line");
            if (toks.size() != 3 || (toks[0] != "edge" && toks[0] != "col")) {
                throw DimacsError("line " + std::to_string(line_no) + ": malformed header, expected 'p edge n m'");
            }
            const long nv = parse_int(toks[1], line_no);
            const long m = parse_int(toks[2], line_no);
            if (nv < 0 || m < 0) throw DimacsError("line " + std::to_string(line_no) + ": negative size in header");
            n = nv;
        } else if (kind == "e") {
            if (!n) throw DimacsError("line " + std::to_string(line_no) + ": edge before problem line");
            if (toks.size() != 2) throw DimacsError("line " + std::to_string(line_no) + ": expected 'e u v'");
            const long u = parse_int(toks[0], line_no);
            const long v = parse_int(toks[1], line_no);
            if (u < 1 || u > *n || v < 1 || v > *n) {
                throw DimacsError("line " + std::to_string(line_no) + ": vertex id out of range 1.." +
                                  std::to_string(*n));
            }
            if (u == v) throw DimacsError("line " + std::to_string(line_no) + ": self-loop on vertex " + toks[0]);
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } else {
            throw DimacsError("line " + std::to_string(line_no) + ": unknown line type '" + kind + "'");
        }
    }
    if (!n) throw DimacsError("missing 'p edge n m' header");
    return Graph(range_set(1, static_cast<int>(*n)), edges);
}

std::string write_dimacs(const Graph& g) {
    const auto verts = g.vertices();
    const VertexId max_id = verts.empty() ? 0 : *verts.rbegin();
    std::ostringstream out;
    out << "p edge " << max_id << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace weakcover
