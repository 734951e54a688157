#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weakcover {

/// Opaque vertex label. Ids are stable: deleting vertices never renumbers the rest.
using VertexId = int;
using VertexSet = std::set<VertexId>;

/// Undirected edge stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph over an arbitrary set of vertex ids.
///
/// Immutable once built: every transformation returns a new graph. Symmetry of
/// the adjacency sets and the absence of self-loops are checked on construction.
class Graph {
public:
    Graph() = default;
    /// Builds a graph; duplicate edges collapse, self-loops and edges with
    /// unknown endpoints throw GraphError.
    Graph(VertexSet vertices, const std::vector<Edge>& edges);

    [[nodiscard]] std::size_t num_vertices() const { return adj_.size(); }
    [[nodiscard]] std::size_t num_edges() const { return num_edges_; }
    [[nodiscard]] bool empty() const { return adj_.empty(); }

    [[nodiscard]] VertexSet vertices() const;
    [[nodiscard]] bool contains(VertexId v) const { return adj_.count(v) != 0; }
    /// Neighborhood of v; throws GraphError for unknown v.
    [[nodiscard]] const VertexSet& neighbors(VertexId v) const;
    [[nodiscard]] std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    [[nodiscard]] bool has_edge(VertexId a, VertexId b) const;
    /// All edges, (u < v), in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::map<VertexId, VertexSet> adj_;
    std::size_t num_edges_ = 0;
};

enum class Family { complete, cycle, wheel, double_wheel, random };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

Graph complete_graph(int n);
/// Cycle 1-2-...-n-1.
Graph cycle_graph(int n);
/// Cycle on 1..n-1 plus hub n adjacent to every cycle vertex.
Graph wheel_graph(int n);
/// Cycle on 1..n-2 plus hubs n-1 and n, each adjacent to every cycle vertex and
/// to each other; (n-1, n) is the central axis.
Graph double_wheel_graph(int n);
/// Erdos-Renyi G(n, p) on vertices 1..n. Pairs (i, j), i < j, are visited in
/// lexicographic order and each draws one 53-bit uniform from mt19937_64(seed).
Graph random_graph(int n, double p, std::uint64_t seed);

/// Dispatches to the named generators, validating per-family minimum sizes.
Graph gen_family(Family family, int n, std::optional<double> p = std::nullopt,
                 std::optional<std::uint64_t> seed = std::nullopt);

/// Common neighbourhood and private neighbourhoods of an edge (i, j).
struct ReductionSets {
    VertexSet delta;  ///< common neighbours of i and j
    VertexSet d_i;    ///< N(i) minus j and delta
    VertexSet d_j;    ///< N(j) minus i and delta
};

ReductionSets reduction_sets(const Graph& g, VertexId i, VertexId j);

bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// Induced subgraph on V(g) \ s with the original ids.
Graph delete_vertices(const Graph& g, const VertexSet& s);

class DimacsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the DIMACS edge format ("c" comments, one "p edge n m" header,
/// "e u v" lines with 1 <= u, v <= n). Vertices are 1..n.
Graph parse_dimacs(std::string_view text);
/// Writes "p edge N m" with N the largest vertex id, then one "e" line per edge.
std::string write_dimacs(const Graph& g);

}  // namespace weakcover
