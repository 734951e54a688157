#pragma once

#include <cstddef>
#include <stdexcept>

#include "weakcover/graph.hpp"

namespace weakcover {

inline constexpr std::size_t kDefaultExactLimit = 50;
/// Hard ceiling of the bitmask search, whatever limit is requested.
inline constexpr std::size_t kMaxExactVertices = 64;

class ExactLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimum vertex cover by branch and bound.
///
/// Branches on a vertex of maximum degree (smallest id on ties), taking it into
/// the cover first and then its whole neighbourhood. Nodes are pruned against
/// the larger of a greedy maximal matching and the rounded-up LPR value, the
/// latter read off a maximum matching of the bipartite double cover.
/// Throws ExactLimitError when g has more than `limit` vertices.
VertexSet exact_vc(const Graph& g, std::size_t limit = kDefaultExactLimit);

struct RestrictedCover {
    VertexSet cover;
    std::size_t delta_bar = 0;
};

/// Minimum cover holding exactly one of i, j. Computed as the better of
/// N(j) + VC(G - N[j]) (i kept, j dropped) and N(i) + VC(G - N[i]); the first
/// wins ties.
RestrictedCover exact_restricted_vc(const Graph& g, VertexId i, VertexId j,
                                    std::size_t limit = kDefaultExactLimit);

struct SigmaReport {
    Edge edge;
    std::size_t delta = 0;      ///< minimum cover size
    std::size_t delta_bar = 0;  ///< minimum size with exactly one endpoint
    std::size_t sigma = 0;      ///< delta_bar - delta

    friend bool operator==(const SigmaReport&, const SigmaReport&) = default;
};

SigmaReport sigma(const Graph& g, VertexId i, VertexId j, std::size_t limit = kDefaultExactLimit);

struct EdgeClass {
    bool weak = false;              ///< some minimum cover holds exactly one endpoint
    bool strong = false;            ///< some minimum cover holds both endpoints
    bool uniformly_strong = false;  ///< every minimum cover holds both

    friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

EdgeClass classify_edge(const Graph& g, VertexId i, VertexId j, std::size_t limit = kDefaultExactLimit);

/// Lexicographically first edge with sigma 0. Throws GraphError on an edgeless graph.
Edge find_weak_edge(const Graph& g, std::size_t limit = kDefaultExactLimit);

}  // namespace weakcover
