#include "weakcover/approx.hpp"

#include <algorithm>
#include <string>

#include "weakcover/relaxations.hpp"

namespace weakcover {

namespace {

CoverReport finish(const Graph& g, VertexSet cover) {
    if (!is_vertex_cover(g, cover)) throw InvariantViolation("result is not a vertex cover");
    CoverReport r;
    r.size = cover.size();
    r.cover = std::move(cover);
    r.lpr_bound = solve_lpr(g).z_value;
    if (r.lpr_bound.is_zero()) {
        r.ratio_vs_lpr = 1;
    } else {
        r.ratio_vs_lpr = Rat(static_cast<std::int64_t>(r.size)) / r.lpr_bound;
    }
    if (r.ratio_vs_lpr > Rat(2)) throw InvariantViolation("cover exceeds twice the LPR bound");
    return r;
}

struct Round {
    Graph chosen_from;  // the {0,1}-reduced graph the pair was taken from
    VertexPair pair;
};

std::pair<CoverReport, Trace> run(const Graph& g, const WeakEdgeOracle& oracle, std::vector<Round>* rounds) {
    Trace trace;
    Graph cur = g;
    for (;;) {
        auto z = zero_one_reduce(cur);
        if (z.reduced.empty()) {
            ReductionFrame last;
            last.i0 = std::move(z.i0);
            last.i1 = std::move(z.i1);
            trace.frames.push_back(std::move(last));
            break;
        }
        const VertexPair p = oracle(z.reduced);
        if (!z.reduced.has_edge(p.first, p.second)) {
            throw InvariantViolation("oracle returned (" + std::to_string(p.first) + "," +
                                     std::to_string(p.second) + "), not an edge");
        }
        auto er = weak_edge_reduce(z.reduced, p.first, p.second);
        er.frame.i0 = std::move(z.i0);
        er.frame.i1 = std::move(z.i1);
        trace.frames.push_back(std::move(er.frame));
        if (rounds) rounds->push_back({std::move(z.reduced), p});
        cur = std::move(er.reduced);
    }

    VertexSet cover;
    for (auto it = trace.frames.rbegin(); it != trace.frames.rend(); ++it) cover = reconstruct(*it, cover);
    auto report = finish(g, std::move(cover));
    if (!accounting_holds(g, report, trace)) throw InvariantViolation("trace accounting does not balance");
    return {std::move(report), std::move(trace)};
}

}  // namespace

CoverReport matching_2approx(const Graph& g) {
    VertexSet matched;
    for (const Edge& e : g.edges()) {
        if (matched.count(e.u) || matched.count(e.v)) continue;
        matched.insert(e.u);
        matched.insert(e.v);
    }
    return finish(g, std::move(matched));
}

std::pair<CoverReport, Trace> wer(const Graph& g, const WeakEdgeOracle& oracle) {
    return run(g, oracle, nullptr);
}

std::pair<CoverReport, Trace> wer_exact(const Graph& g, std::size_t limit) {
    return wer(g, [limit](const Graph& h) {
        const Edge e = find_weak_edge(h, limit);
        return VertexPair{e.u, e.v};
    });
}

std::pair<CoverReport, Trace> awer(const Graph& g, bool audit, std::size_t limit) {
    std::optional<Rat> first_z;
    std::vector<Round> rounds;
    auto oracle = [&first_z](const Graph& h) {
        const auto scan = best_restricted_edge(h);
        if (!first_z) first_z = scan.z;
        return VertexPair{scan.edge.u, scan.edge.v};
    };
    auto [report, trace] = run(g, oracle, &rounds);
    // The first reduction keeps every optimum up to the LP ones, so shift back.
    if (first_z) report.best_z = *first_z + Rat(static_cast<std::int64_t>(trace.frames.front().i1.size()));

    if (audit) {
        if (g.num_vertices() > limit) {
            report.audit_skipped = true;
        } else {
            std::vector<std::size_t> sigmas;
            for (const Round& r : rounds)
                sigmas.push_back(sigma(r.chosen_from, r.pair.first, r.pair.second, limit).sigma);
            const std::size_t top = sigmas.empty() ? 0 : *std::max_element(sigmas.begin(), sigmas.end());
            report.sigma_bound = SigmaBound{top, Rat(2) - Rat(1, static_cast<std::int64_t>(1 + top))};
            trace.per_frame_sigma = std::move(sigmas);
        }
    }
    return {std::move(report), std::move(trace)};
}

Rat ratio_certificate(const Graph& g, const CoverReport& report, std::size_t limit) {
    if (!is_vertex_cover(g, report.cover)) throw InvariantViolation("report cover does not cover the graph");
    const auto size = static_cast<std::int64_t>(report.cover.size());
    if (g.num_vertices() <= std::min(limit, kMaxExactVertices)) {
        const auto best = static_cast<std::int64_t>(exact_vc(g, limit).size());
        return best == 0 ? Rat(1) : Rat(size, best);
    }
    if (report.lpr_bound.is_zero()) return Rat(1);
    return Rat(size) / report.lpr_bound;
}

TraceAccounting account(const Trace& trace) {
    TraceAccounting a;
    for (const auto& f : trace.frames) {
        if (f.weak_pair) ++a.rounds;
        a.ones += f.i1.size();
        a.fixed += f.i0.size() + f.i1.size();
        a.common += f.delta.size();
    }
    return a;
}

bool accounting_holds(const Graph& g, const CoverReport& report, const Trace& trace) {
    const auto a = account(trace);
    return report.size == a.ones + a.common + a.rounds && g.num_vertices() == a.fixed + a.common + 2 * a.rounds;
}

}  // namespace weakcover
