#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weakcover/exact.hpp"
#include "weakcover/graph.hpp"
#include "weakcover/rational.hpp"
#include "weakcover/reductions.hpp"

namespace weakcover {

/// Raised when a certificate that must hold by construction fails.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SigmaBound {
    std::size_t max_sigma = 0;
    Rat guarantee;  ///< 2 - 1/(1 + max_sigma)

    friend bool operator==(const SigmaBound&, const SigmaBound&) = default;
};

struct CoverReport {
    VertexSet cover;
    std::size_t size = 0;
    Rat lpr_bound;
    std::optional<Rat> best_z;  ///< lower bound from the first restricted scan, when one ran
    Rat ratio_vs_lpr;           ///< size / lpr_bound, 1 when both are 0
    std::optional<SigmaBound> sigma_bound;
    bool audit_skipped = false;

    friend bool operator==(const CoverReport&, const CoverReport&) = default;
};

struct Trace {
    /// One frame per round; the last has no weak_pair.
    std::vector<ReductionFrame> frames;
    /// sigma of each frame's pair on the graph it was chosen from, when audited.
    std::optional<std::vector<std::size_t>> per_frame_sigma;
};

/// Endpoints in the order the reduction should treat them: first is "i".
using VertexPair = std::pair<VertexId, VertexId>;
using WeakEdgeOracle = std::function<VertexPair(const Graph&)>;

/// All endpoints of a maximal matching grown over the edges in lexicographic order.
CoverReport matching_2approx(const Graph& g);

/// Reduce-then-backtrack loop: {0,1}-reduce, stop if nothing is left, else ask
/// the oracle for an edge of the reduced graph and apply the edge reduction.
/// The cover is then rebuilt frame by frame from the last one. Throws
/// InvariantViolation when the oracle returns a non-edge or the result is not
/// a cover.
std::pair<CoverReport, Trace> wer(const Graph& g, const WeakEdgeOracle& oracle);

/// wer with find_weak_edge as the oracle; optimal on every graph it accepts.
std::pair<CoverReport, Trace> wer_exact(const Graph& g, std::size_t limit = kDefaultExactLimit);

/// wer driven by the least restricted-LP value edge. With `audit`, each round's
/// sigma is measured exactly on the graph the edge was picked from, unless g is
/// larger than `limit` (then audit_skipped is set).
std::pair<CoverReport, Trace> awer(const Graph& g, bool audit, std::size_t limit = kDefaultExactLimit);

/// size / minimum cover size when g is within `limit`, else size / lpr_bound.
Rat ratio_certificate(const Graph& g, const CoverReport& report, std::size_t limit = kDefaultExactLimit);

struct TraceAccounting {
    std::size_t rounds = 0;       ///< frames carrying a pair
    std::size_t ones = 0;         ///< sum of |I1| over frames
    std::size_t fixed = 0;        ///< sum of |I0| + |I1| over frames
    std::size_t common = 0;       ///< sum of |delta| over frames
};

TraceAccounting account(const Trace& trace);

/// |cover| == ones + common + rounds and |V| == fixed + common + 2 * rounds.
bool accounting_holds(const Graph& g, const CoverReport& report, const Trace& trace);

}  // namespace weakcover
