#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "weakcover/approx.hpp"
#include "weakcover/battery.hpp"
#include "weakcover/exact.hpp"
#include "weakcover/relaxations.hpp"
#include "weakcover/report.hpp"

using namespace weakcover;

namespace {

struct RunConfig {
    std::string command;
    std::optional<std::string> input;
    std::optional<std::string> family;
    std::optional<int> n;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> edge;
    std::size_t exact_limit = kDefaultExactLimit;
    bool audit = false;
    std::string format = "dimacs";
    std::optional<std::string> output;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_graph_options(CLI::App* sub, RunConfig& cfg) {
    auto* input = sub->add_option("--input", cfg.input, "DIMACS file, or - for stdin");
    auto* family = sub->add_option("--family", cfg.family, "complete | cycle | wheel | double_wheel | random");
    sub->add_option("-n", cfg.n, "vertex count for --family")->needs(family);
    sub->add_option("-p", cfg.p, "edge probability for --family random")->needs(family);
    sub->add_option("--seed", cfg.seed, "seed for --family random")->needs(family);
    input->excludes(family);
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
    sub->add_option("--exact-limit", cfg.exact_limit, "largest graph handed to the exact search");
}

Graph load_graph(const RunConfig& cfg) {
    if (cfg.input) {
        std::string text;
        if (*cfg.input == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(*cfg.input);
            if (!in) throw UsageError("cannot open " + *cfg.input);
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        return parse_dimacs(text);
    }
    if (!cfg.family) throw UsageError("give a graph with --input or --family");
    if (!cfg.n) throw UsageError("--family needs -n");
    return gen_family(parse_family(*cfg.family), *cfg.n, cfg.p, cfg.seed);
}

std::pair<VertexId, VertexId> parse_edge(const RunConfig& cfg) {
    if (!cfg.edge) throw UsageError(cfg.command + " needs --edge i,j");
    const auto comma = cfg.edge->find(',');
    if (comma == std::string::npos) throw UsageError("--edge expects i,j");
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string a = cfg.edge->substr(0, comma);
        const std::string b = cfg.edge->substr(comma + 1);
        const int i = std::stoi(a, &used_a);
        const int j = std::stoi(b, &used_b);
        if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing text");
        return {i, j};
    } catch (const std::logic_error&) {
        throw UsageError("--edge expects two integers i,j, got " + *cfg.edge);
    }
}

Json graph_json(const Graph& g) {
    Json out;
    out["vertices"] = to_json(g.vertices());
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    out["edges"] = std::move(edges);
    return out;
}

Json cover_and_trace(const std::pair<CoverReport, Trace>& run) {
    Json out;
    out["report"] = to_json(run.first);
    out["trace"] = to_json(run.second);
    return out;
}

/// Returns the process exit code.
int execute(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "reproduce") {
        const auto results = run_battery(cfg.exact_limit, &std::cerr);
        bool ok = true;
        for (const auto& r : results) {
            out << format_result(r) << "\n";
            ok = ok && (r.observational || r.passed);
        }
        out << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
        return ok ? 0 : 2;
    }

    const Graph g = load_graph(cfg);
    const std::string& c = cfg.command;
    if (c == "gen") {
        if (cfg.format == "dimacs") {
            out << write_dimacs(g);
        } else {
            out << emit(graph_json(g));
        }
        return 0;
    }
    if (c == "lpr") {
        out << emit(to_json(solve_lpr(g)));
    } else if (c == "elp") {
        out << emit(to_json(solve_elp(g)));
    } else if (c == "relp") {
        const auto [i, j] = parse_edge(cfg);
        out << emit(to_json(solve_relp(g, i, j)));
    } else if (c == "scan-z") {
        const auto scan = best_restricted_edge(g);
        Json j;
        j["edge"] = Json::array({scan.edge.u, scan.edge.v});
        j["z"] = to_json(scan.z);
        Json all = Json::array();
        for (const auto& [e, z] : scan.all_z) all.push_back({{"edge", Json::array({e.u, e.v})}, {"z", to_json(z)}});
        j["all"] = std::move(all);
        out << emit(j);
    } else if (c == "wer") {
        out << emit(cover_and_trace(wer_exact(g, cfg.exact_limit)));
    } else if (c == "awer") {
        out << emit(cover_and_trace(awer(g, cfg.audit, cfg.exact_limit)));
    } else if (c == "baseline") {
        out << emit(to_json(matching_2approx(g)));
    } else if (c == "exact") {
        const VertexSet cover = exact_vc(g, cfg.exact_limit);
        Json j;
        j["cover"] = to_json(cover);
        j["size"] = cover.size();
        out << emit(j);
    } else if (c == "sigma") {
        const auto [i, j] = parse_edge(cfg);
        out << emit(to_json(sigma(g, i, j, cfg.exact_limit)));
    } else if (c == "classify") {
        const auto [i, j] = parse_edge(cfg);
        Json r;
        r["edge"] = Json::array({i, j});
        r.update(to_json(classify_edge(g, i, j, cfg.exact_limit)));
        out << emit(r);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex cover relaxations, reductions and approximation"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::pair<const char*, const char*> commands[] = {
        {"gen", "write a generated or parsed graph"},
        {"lpr", "edge LP relaxation"},
        {"elp", "edge LP plus odd-cycle inequalities"},
        {"relp", "odd-cycle LP with one edge held at equality (--edge)"},
        {"scan-z", "restricted LP value of every edge and the minimiser"},
        {"wer", "reduction algorithm with the exact weak-edge oracle"},
        {"awer", "reduction algorithm with the restricted-LP edge choice"},
        {"baseline", "maximal matching 2-approximation"},
        {"exact", "minimum vertex cover by branch and bound"},
        {"sigma", "extra cost of covering exactly one endpoint of --edge"},
        {"classify", "weak / strong / uniformly strong for --edge"},
        {"reproduce", "run the acceptance battery"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        const std::string n = name;
        if (n != "reproduce") add_graph_options(sub, cfg);
        add_output_options(sub, cfg);
        if (n == "gen") sub->add_option("--format", cfg.format, "json | dimacs")->check(CLI::IsMember({"json", "dimacs"}));
        if (n == "relp" || n == "sigma" || n == "classify") sub->add_option("--edge", cfg.edge, "edge as i,j");
        if (n == "awer") sub->add_flag("--audit", cfg.audit, "measure sigma of every chosen edge exactly");
        sub->callback([&cfg, n] { cfg.command = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (const char* env = std::getenv("WEAKCOVER_EXACT_LIMIT")) {
        try {
            cfg.exact_limit = std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "error: WEAKCOVER_EXACT_LIMIT must be a count\n";
            return 1;
        }
    }

    try {
        std::ostringstream buffer;
        const int code = execute(cfg, buffer);
        if (cfg.output) {
            std::ofstream file(*cfg.output);
            if (!file) throw UsageError("cannot write " + *cfg.output);
            file << buffer.str();
        } else {
            std::cout << buffer.str();
        }
        return code;
    } catch (const InvariantViolation& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // invalid_argument (bad graph, non-edge, bad family) is a usage problem.
        if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr) {
            std::cerr << "assertion failed: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const LpInfeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
