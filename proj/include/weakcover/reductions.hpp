#pragma once

#include <optional>

#include "weakcover/graph.hpp"

namespace weakcover {

/// One round of the reduce-then-backtrack scheme: the vertices fixed by the
/// LP ({0,1}-reduction) and, when an edge reduction followed, the edge used
/// together with what backtracking needs to pick one of its endpoints.
struct ReductionFrame {
    VertexSet i0;                      ///< LP zeros
    VertexSet i1;                      ///< LP ones
    std::optional<Edge> weak_pair;     ///< oriented: u plays "i", v plays "j"
    VertexSet delta;                   ///< common neighbours of the pair
    VertexSet d_i;                     ///< private neighbours of the "i" endpoint
    Graph reduced;                     ///< graph left after this frame

    [[nodiscard]] VertexId i() const { return weak_pair->u; }
    [[nodiscard]] VertexId j() const { return weak_pair->v; }
};

struct ZeroOneReduction {
    Graph reduced;
    VertexSet i0;
    VertexSet i1;
};

/// Solves the edge LP once and deletes the vertices at 0 and at 1. Every
/// vertex of `reduced` sits at 1/2 in that solution.
ZeroOneReduction zero_one_reduce(const Graph& g);

struct EdgeReduction {
    Graph reduced;
    ReductionFrame frame;
};

/// (i, j)-reduction: deletes i, j and their common neighbours, then joins every
/// private neighbour of i to every private neighbour of j. The frame keeps the
/// orientation (i, j) exactly as given; Edge's u < v normalisation is not
/// applied to it.
EdgeReduction weak_edge_reduce(const Graph& g, VertexId i, VertexId j);

/// Lifts a cover r of frame.reduced back through the frame:
/// r + delta + {j} when d_i is inside r, else r + delta + {i}; then adds i1.
/// Throws std::logic_error when r does not cover frame.reduced.
VertexSet reconstruct(const ReductionFrame& frame, const VertexSet& r);

}  // namespace weakcover
