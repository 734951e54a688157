#include "weakcover/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace weakcover {

namespace {

Json edge_json(VertexId a, VertexId b) { return Json::array({a, b}); }

Edge edge_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("edge must be a two-element array");
    return Edge(j[0].get<VertexId>(), j[1].get<VertexId>());
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a string");
    return Rat::parse(j.get<std::string>());
}

Json to_json(const VertexSet& s) {
    Json out = Json::array();
    for (VertexId v : s) out.push_back(v);
    return out;
}

VertexSet vertex_set_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vertex set must be an array");
    VertexSet out;
    for (const auto& v : j) out.insert(v.get<VertexId>());
    return out;
}

Json to_json(const CoverReport& r) {
    Json out;
    out["cover"] = to_json(r.cover);
    out["size"] = r.size;
    out["lpr_bound"] = to_json(r.lpr_bound);
    out["best_z"] = r.best_z ? to_json(*r.best_z) : Json(nullptr);
    out["ratio_vs_lpr"] = to_json(r.ratio_vs_lpr);
    if (r.sigma_bound) {
        out["sigma_bound"] = {{"max_sigma", r.sigma_bound->max_sigma},
                              {"guarantee", to_json(r.sigma_bound->guarantee)}};
    } else {
        out["sigma_bound"] = nullptr;
    }
    out["audit_skipped"] = r.audit_skipped;
    return out;
}

CoverReport cover_report_from_json(const Json& j) {
    CoverReport r;
    r.cover = vertex_set_from_json(j.at("cover"));
    r.size = j.at("size").get<std::size_t>();
    r.lpr_bound = rat_from_json(j.at("lpr_bound"));
    if (!j.at("best_z").is_null()) r.best_z = rat_from_json(j.at("best_z"));
    r.ratio_vs_lpr = rat_from_json(j.at("ratio_vs_lpr"));
    if (const auto& sb = j.at("sigma_bound"); !sb.is_null()) {
        r.sigma_bound = SigmaBound{sb.at("max_sigma").get<std::size_t>(), rat_from_json(sb.at("guarantee"))};
    }
    r.audit_skipped = j.at("audit_skipped").get<bool>();
    return r;
}

bool is_integral(const Assignment& x) {
    return std::all_of(x.begin(), x.end(), [](const auto& kv) { return kv.second.is_integer(); });
}

Json to_json(const RelaxationResult& r) {
    Json out;
    out["kind"] = std::string(relaxation_name(r.kind));
    if (r.restricted_edge) out["edge"] = edge_json(r.restricted_edge->u, r.restricted_edge->v);
    out["z"] = to_json(r.z_value);
    out["integral"] = is_integral(r.solution.values);
    out["cuts"] = r.cuts;
    Json values = Json::object();
    for (const auto& [v, x] : r.solution.values) values[std::to_string(v)] = to_json(x);
    out["values"] = std::move(values);
    out["tight_rows"] = r.solution.tight_rows;
    out["basic"] = r.solution.is_basic;
    return out;
}

RelaxationResult relaxation_from_json(const Json& j) {
    RelaxationResult r;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "LPR") {
        r.kind = RelaxationKind::lpr;
    } else if (kind == "ELP") {
        r.kind = RelaxationKind::elp;
    } else if (kind == "RELP") {
        r.kind = RelaxationKind::relp;
    } else {
        throw std::invalid_argument("unknown relaxation kind " + kind);
    }
    if (j.contains("edge")) r.restricted_edge = edge_from_json(j.at("edge"));
    r.z_value = rat_from_json(j.at("z"));
    r.cuts = j.at("cuts").get<std::size_t>();
    for (const auto& [k, v] : j.at("values").items()) r.solution.values.emplace(std::stoi(k), rat_from_json(v));
    r.solution.objective = r.z_value;
    r.solution.tight_rows = j.at("tight_rows").get<std::vector<std::size_t>>();
    r.solution.is_basic = j.at("basic").get<bool>();
    return r;
}

Json to_json(const SigmaReport& r) {
    Json out;
    out["edge"] = edge_json(r.edge.u, r.edge.v);
    out["delta"] = r.delta;
    out["delta_bar"] = r.delta_bar;
    out["sigma"] = r.sigma;
    return out;
}

SigmaReport sigma_report_from_json(const Json& j) {
    SigmaReport r;
    r.edge = edge_from_json(j.at("edge"));
    r.delta = j.at("delta").get<std::size_t>();
    r.delta_bar = j.at("delta_bar").get<std::size_t>();
    r.sigma = j.at("sigma").get<std::size_t>();
    return r;
}

Json to_json(const EdgeClass& c) {
    Json out;
    out["weak"] = c.weak;
    out["strong"] = c.strong;
    out["uniformly_strong"] = c.uniformly_strong;
    return out;
}

EdgeClass edge_class_from_json(const Json& j) {
    return {j.at("weak").get<bool>(), j.at("strong").get<bool>(), j.at("uniformly_strong").get<bool>()};
}

Json to_json(const Trace& t) {
    Json frames = Json::array();
    for (const auto& f : t.frames) {
        Json fj;
        fj["i0"] = to_json(f.i0);
        fj["i1"] = to_json(f.i1);
        fj["pair"] = f.weak_pair ? edge_json(f.i(), f.j()) : Json(nullptr);
        fj["delta"] = to_json(f.delta);
        fj["d_i"] = to_json(f.d_i);
        frames.push_back(std::move(fj));
    }
    Json out;
    out["frames"] = std::move(frames);
    out["per_frame_sigma"] = t.per_frame_sigma ? Json(*t.per_frame_sigma) : Json(nullptr);
    return out;
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace weakcover
