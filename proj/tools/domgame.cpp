#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "domgame/builders.hpp"
#include "domgame/edge_game.hpp"
#include "domgame/game.hpp"
#include "domgame/generate.hpp"
#include "domgame/graph6.hpp"
#include "domgame/recognizers.hpp"
#include "domgame/strategies.hpp"
#include "domgame/sweep.hpp"
#include "domgame/transforms.hpp"

namespace {

using namespace domgame;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::vector<Graph> load_inputs(const std::string& graph6, const std::vector<std::string>& files,
                               int gen_n) {
    std::vector<Graph> graphs;
    if (!graph6.empty()) graphs.push_back(parse_graph6(graph6));
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        auto batch = read_graph6_stream(in);
        graphs.insert(graphs.end(), batch.begin(), batch.end());
    }
    if (gen_n > 0) {
        auto batch = generate_all_graphs_extended(gen_n);
        graphs.insert(graphs.end(), batch.begin(), batch.end());
    }
    if (graphs.empty()) throw std::runtime_error("no input graphs: pass --graph6, --input or --gen-n");
    return graphs;
}

VertexSet parse_vertex_list(const std::string& csv, int n) {
    VertexSet out{};
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = std::stoi(tok);
        if (v < 0 || v >= n) throw std::runtime_error("predominated vertex out of range");
        out.set(v);
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text << "\n";
    }
}

int cmd_solve(const std::string& graph6, const std::vector<std::string>& files,
              const std::string& predominate, bool prune, bool edge_game) {
    SolverOptions opt;
    opt.continuation_pruning = prune;
    for (const Graph& g : load_inputs(graph6, files, 0)) {
        ordered_json j;
        j["graph6"] = encode_graph6(g);
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        if (edge_game) {
            EdgeSet pre{};
            if (!predominate.empty()) pre = parse_vertex_list(predominate, g.edge_count());
            j["game_edge_domination_number"] = edge_game_value(g, Player::Dominator, pre, opt);
            j["staller_start_value"] = edge_game_value(g, Player::Staller, pre, opt);
        } else {
            VertexSet pre{};
            if (!predominate.empty()) pre = parse_vertex_list(predominate, g.vertex_count());
            j["game_domination_number"] = game_value(g, Player::Dominator, pre, opt);
            j["staller_start_value"] = game_value(g, Player::Staller, pre, opt);
        }
        std::cout << j.dump() << "\n";
    }
    return kExitPass;
}

int cmd_recognize(const std::string& graph6, const std::vector<std::string>& files) {
    for (const Graph& g : load_inputs(graph6, files, 0)) {
        ordered_json j;
        j["graph6"] = encode_graph6(g);
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["connected"] = is_connected(g);
        auto d = diameter(g);
        if (d)
            j["diameter"] = *d;
        else
            j["diameter"] = "infinite";
        j["min_degree"] = min_degree(g);
        j["cubic"] = is_cubic(g);
        j["claw_free"] = is_claw_free(g);
        j["k4_free"] = forbidden_subgraph_free(g, ForbiddenPattern::K4);
        j["diamond_free"] = forbidden_subgraph_free(g, ForbiddenPattern::Diamond);
        j["c6plus_free"] = forbidden_subgraph_free(g, ForbiddenPattern::C6plus);
        j["traceable"] = is_traceable(g);
        j["hamiltonian"] = is_hamiltonian(g);
        auto describe = [&](const TrailSearch& r) -> ordered_json {
            switch (r.status) {
                case SearchStatus::Unknown: return "unknown";
                case SearchStatus::Absent: return "absent";
                case SearchStatus::Found: break;
            }
            ordered_json t;
            t["vertices"] = r.trail->vertices;
            t["edges"] = r.trail->edge_indices;
            t["closed"] = r.trail->closed;
            return t;
        };
        j["edge_dominating_circuit"] = describe(find_edge_dominating_circuit(g));
        j["edge_dominating_trail"] = describe(find_edge_dominating_trail(g));
        std::cout << j.dump() << "\n";
    }
    return kExitPass;
}

int cmd_strategy_audit(const std::string& graph6, const std::vector<std::string>& files,
                       const std::string& profile, const std::string& staller,
                       std::uint64_t seed) {
    StallerModel model;
    if (staller == "exact")
        model = StallerModel::ExactAdversary;
    else if (staller == "greedy")
        model = StallerModel::GreedyMinGain;
    else if (staller == "random")
        model = StallerModel::SeededRandom;
    else
        throw std::runtime_error("unknown staller model: " + staller);

    bool all_ok = true;
    for (const Graph& g : load_inputs(graph6, files, 0)) {
        AuditReport report;
        if (profile == "cubic") {
            report = simulate_cubic(g, model, seed);
        } else if (profile == "clawfree2") {
            report = simulate_clawfree2(g, model, seed);
        } else if (profile == "edge-circuit") {
            auto circuit = find_edge_dominating_circuit(g);
            if (circuit.status != SearchStatus::Found)
                throw std::runtime_error("no edge dominating circuit in " + encode_graph6(g));
            report = simulate_edge_circuit(g, *circuit.trail, model, seed);
        } else {
            throw std::runtime_error("unknown profile: " + profile);
        }
        std::cout << report.to_json() << "\n";
        all_ok = all_ok && report.all_passed();
    }
    return all_ok ? kExitPass : kExitCounterexample;
}

int cmd_transform(const std::string& graph6, bool do_inflate, bool do_contract) {
    Graph g = parse_graph6(graph6);
    ordered_json j;
    j["input"] = encode_graph6(g);
    if (do_inflate == do_contract) throw std::runtime_error("pass exactly one of --inflate/--contract");
    auto [result, map] = do_inflate ? inflate(g) : contract_triangles(g);
    j["operation"] = do_inflate ? "inflate" : "contract";
    j["result"] = encode_graph6(result);
    j["triangles"] = ordered_json::array();
    for (const auto& t : map.triangle) j["triangles"].push_back({t[0], t[1], t[2]});
    j["connectors"] = ordered_json::array();
    for (auto [a, b] : map.connector) j["connectors"].push_back({a, b});
    std::cout << j.dump(2) << "\n";
    return kExitPass;
}

int cmd_sweep(const SweepConfig& cfg_in, const std::vector<std::string>& files, int gen_n,
              const std::string& format, const std::string& out_path) {
    SweepConfig cfg = cfg_in;
    if (const char* env = std::getenv("DOMGAME_JOBS")) cfg.jobs = std::max(1, std::atoi(env));
    std::vector<Graph> inputs = load_inputs("", files, gen_n);
    SweepReport report = run_sweep(cfg, inputs);
    emit(format == "csv" ? report.to_csv() : report.to_json(), out_path);
    return report.all_passed() ? kExitPass : kExitCounterexample;
}

int cmd_figure1() {
    auto results = verify_builtin_instances();
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%-6s %-12s gamma_g=%d (expected %d)  traceable=%s (expected %s)  %s\n",
                    r.name.c_str(), r.graph6.c_str(), r.actual_value, r.expected_value,
                    r.traceable ? "yes" : "no", r.expected_traceable ? "yes" : "no",
                    r.ok ? "ok" : "MISMATCH");
        ok = ok && r.ok;
    }
    return ok ? kExitPass : kExitCounterexample;
}

int cmd_gen(int n, bool connected_only, const std::string& out_path) {
    auto graphs = generate_all_graphs_extended(n);
    std::string text;
    long count = 0;
    for (const Graph& g : graphs) {
        if (connected_only && !is_connected(g)) continue;
        text += encode_graph6(g) + "\n";
        ++count;
    }
    if (!text.empty()) text.pop_back();
    emit(text, out_path);
    std::cerr << count << " graphs\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers, strategy audits and sweeps for the domination game"};
    app.require_subcommand(1);

    std::string graph6, predominate, profile = "cubic", staller = "exact";
    std::vector<std::string> files;
    std::uint64_t seed = 0;
    bool prune = false, do_inflate = false, do_contract = false;

    auto add_inputs = [&](CLI::App* cmd, bool single = false) {
        cmd->add_option("-g,--graph6", graph6, "one graph6 record");
        if (!single) cmd->add_option("-i,--input", files, "graph6 file(s), one record per line");
    };

    CLI::App* solve = app.add_subcommand("solve", "game domination numbers of a graph");
    add_inputs(solve);
    solve->add_option("--predominate", predominate, "comma-separated predominated vertices");
    solve->add_flag("--prune", prune, "enable continuation-principle move pruning");

    CLI::App* edge_solve = app.add_subcommand("edge-solve", "edge domination game values");
    add_inputs(edge_solve);
    edge_solve->add_option("--predominate", predominate, "comma-separated predominated edge indices");
    edge_solve->add_flag("--prune", prune, "enable continuation-principle move pruning");

    CLI::App* recognize = app.add_subcommand("recognize", "run every structural predicate");
    add_inputs(recognize);

    CLI::App* audit = app.add_subcommand("strategy-audit", "play a potential-function strategy and audit it");
    add_inputs(audit);
    audit->add_option("--profile", profile, "cubic | edge-circuit | clawfree2");
    audit->add_option("--staller", staller, "exact | greedy | random");
    audit->add_option("--seed", seed, "seed for the random staller");

    CLI::App* transform = app.add_subcommand("transform", "triangle inflation and contraction");
    transform->add_option("-g,--graph6", graph6, "one graph6 record")->required();
    transform->add_flag("--inflate", do_inflate, "replace vertices by triangles");
    transform->add_flag("--contract", do_contract, "contract triangles back");

    SweepConfig cfg;
    int gen_n = 0;
    std::string format = "json", out_path;
    std::vector<std::string> check_names;
    CLI::App* sweep = app.add_subcommand("sweep", "run checks over a graph collection");
    sweep->add_option("-i,--input", files, "graph6 file(s)");
    sweep->add_option("--gen-n", gen_n, "sweep all graphs on n vertices (builtin generator, n <= 9)")
        ->check(CLI::Range(1, 9));
    sweep->add_option("--check", check_names, "checks to run")->required();
    sweep->add_flag("--connected", cfg.filters.connected, "keep connected graphs only");
    sweep->add_option("--min-degree", cfg.filters.min_degree, "minimum degree filter");
    sweep->add_option("--min-diameter", cfg.filters.min_diameter, "minimum diameter filter");
    sweep->add_flag("--claw-free", cfg.filters.claw_free, "keep claw-free graphs only");
    sweep->add_flag("--cubic", cfg.filters.cubic, "keep cubic graphs only");
    sweep->add_option("--max-edges", cfg.filters.max_edges, "maximum edge count filter");
    sweep->add_flag("--line-graphs", cfg.as_line_graphs, "sweep the line graphs of the inputs");
    sweep->add_option("-j,--jobs", cfg.jobs, "worker threads (DOMGAME_JOBS overrides)");
    sweep->add_option("--seed", cfg.seed, "seed forwarded to randomized audits");
    sweep->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("-o,--out", out_path, "write the report here instead of stdout");

    app.add_subcommand("figure1", "verify the bundled sharpness instances");

    int n_gen = 0;
    bool gen_connected = false;
    CLI::App* gen = app.add_subcommand("gen", "emit one representative per isomorphism class");
    gen->add_option("-n", n_gen, "vertex count (<= 9)")->required()->check(CLI::Range(1, 9));
    gen->add_flag("--connected", gen_connected, "connected graphs only");
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(graph6, files, predominate, prune, false);
        if (edge_solve->parsed()) return cmd_solve(graph6, files, predominate, prune, true);
        if (recognize->parsed()) return cmd_recognize(graph6, files);
        if (audit->parsed()) return cmd_strategy_audit(graph6, files, profile, staller, seed);
        if (transform->parsed()) return cmd_transform(graph6, do_inflate, do_contract);
        if (sweep->parsed()) {
            for (const auto& name : check_names) {
                auto c = parse_check(name);
                if (!c) throw std::runtime_error("unknown check: " + name);
                cfg.checks.push_back(*c);
            }
            return cmd_sweep(cfg, files, gen_n, format, out_path);
        }
        if (app.get_subcommand("figure1")->parsed()) return cmd_figure1();
        if (gen->parsed()) return cmd_gen(n_gen, gen_connected, out_path);
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
