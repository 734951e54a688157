#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "weakcover/graph.hpp"
#include "weakcover/lp.hpp"

namespace weakcover {

// Exhaustive reference oracles. They share nothing with the search, LP and
// separation code and are only meant for small graphs.

inline constexpr std::size_t kBruteLimit = 24;

/// Smallest cover size over all 2^n subsets.
std::size_t brute_vc_size(const Graph& g);
/// Smallest cover size holding exactly one of i, j.
std::size_t brute_restricted_size(const Graph& g, VertexId i, VertexId j);
/// Smallest cover size holding both i and j.
std::size_t brute_both_size(const Graph& g, VertexId i, VertexId j);

/// Calls `visit` once per simple odd cycle, as a vertex list starting at its
/// smallest id with the second entry smaller than the last.
void for_each_simple_odd_cycle(const Graph& g, const std::function<void(const std::vector<VertexId>&)>& visit);

struct BruteCycle {
    std::vector<VertexId> vertices;
    Rat weight;  ///< sum over cycle edges of x_u + x_v - 1
};

/// Least-weight simple odd cycle whose inequality is violated at x (weight
/// below 1); ties by vertex list. nullopt when none is violated.
std::optional<BruteCycle> brute_violated_cycle(const Graph& g, const Assignment& x);

}  // namespace weakcover
