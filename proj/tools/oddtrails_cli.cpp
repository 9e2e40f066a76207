// Command-line surface over the library: generate fixture instances, run
// the packing/covering solvers, evaluate the min-max certificate, query the
// brute-force oracles, and verify claimed packings or covers.
//
// stdout carries exactly one JSON document; traces and diagnostics go to
// stderr. Exit codes: 64 usage, 65 budget exceeded, 66 invalid input;
// `solve` exits 0 for a packing and 1 for a cover.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oddtrails/oddtrails.hpp"

namespace {

using namespace oddtrails;
using nlohmann::json;

constexpr int kExitPacking = 0;
constexpr int kExitCover = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBudget = 65;
constexpr int kExitInvalid = 66;

json read_doc(const std::string& path) {
    try {
        if (path.empty()) return json::parse(std::cin);
        std::ifstream in(path);
        require(in.good(), Err::InvalidInput, "cannot open " + path);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(Err::InvalidInput, std::string("bad JSON: ") + e.what());
    }
}

io::GraphDoc load_graph(const std::string& path) { return io::graph_from_json(read_doc(path)); }

std::vector<VertexId> parse_vertex_list(const std::string& arg, char tag) {
    auto eq = arg.find('=');
    require(eq != std::string::npos && !arg.empty() && arg[0] == tag, Err::InvalidInput,
            std::string("expected ") + tag + "=v1,v2,...");
    std::vector<VertexId> out;
    std::stringstream ss(arg.substr(eq + 1));
    for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoi(item));
    require(!out.empty(), Err::InvalidInput, "empty vertex list");
    return out;
}

int run_generate(const std::string& family, int k, int m, uint64_t seed, int n, int edges,
                 double parallel_prob, double sigma_prob) {
    json doc;
    if (family == "fig2") {
        auto f = fixtures::fig2(k);
        doc = io::graph_to_json(f.graph, f.u, f.v);
    } else if (family == "fig6") {
        auto f = fixtures::fig6(k);
        doc = io::graph_to_json(f.graph, f.u, f.v);
        json trails = json::array();
        for (const Trail& t : f.trails) trails.push_back(io::trail_to_json(t));
        doc["trails"] = std::move(trails);
    } else if (family == "hk") {
        auto f = fixtures::hk(k, m);
        doc = io::graph_to_json(f.graph, f.u, f.v);
    } else if (family == "fig8") {
        auto f = fixtures::fig8(k, m);
        doc = io::graph_to_json(f.graph, f.s, f.s);
    } else if (family == "random") {
        Multigraph g = fixtures::random_multigraph(seed, n, edges, parallel_prob, sigma_prob);
        doc = io::graph_to_json(g, 0, 1);
    } else {
        fail(Err::InvalidInput, "unknown family " + family);
    }
    std::cout << doc.dump() << "\n";
    return 0;
}

int run_solve(const std::string& input, int k, bool ss_mode, std::vector<std::string> cd,
              int apath_budget, int oracle_budget, bool trace) {
    io::GraphDoc doc = load_graph(input);
    driver::Budgets budgets;
    budgets.apath.max_h_vertices = apath_budget;
    budgets.oracle.max_edges = oracle_budget;
    if (trace)
        budgets.trace = [](const untangle::IterationTrace& it) {
            std::cerr << json{{"iteration", it.iteration},
                              {"case", untangle::case_name(it.kind)},
                              {"contacts", it.contacts},
                              {"k_uv", it.k_uv},
                              {"phi", it.phi}}
                             .dump()
                      << "\n";
        };

    driver::SolveOutcome out;
    if (!cd.empty()) {
        require(cd.size() == 2, Err::InvalidInput, "--cd needs C=... D=...");
        out = driver::solve_cd(doc.graph, parse_vertex_list(cd[0], 'C'),
                               parse_vertex_list(cd[1], 'D'), k, budgets);
    } else if (ss_mode) {
        require(doc.u.has_value(), Err::InvalidInput, "graph document lacks terminals");
        out = driver::solve_ss(doc.graph, *doc.u, k, budgets);
    } else {
        require(doc.u && doc.v, Err::InvalidInput, "graph document lacks terminals");
        out = *doc.u == *doc.v ? driver::solve_ss(doc.graph, *doc.u, k, budgets)
                               : driver::solve_uv(doc.graph, *doc.u, *doc.v, k, budgets);
    }
    std::cout << io::outcome_to_json(out).dump() << "\n";
    return out.is_packing ? kExitPacking : kExitCover;
}

int run_minmax(const std::string& input, int budget) {
    io::GraphDoc doc = load_graph(input);
    require(doc.u.has_value(), Err::InvalidInput, "graph document lacks terminals");
    minmax::Budget b{budget};
    auto cert = minmax::minmax_rhs(doc.graph, *doc.u, b);
    std::cout << io::certificate_to_json(cert).dump() << "\n";
    return 0;
}

int run_oracle(const std::string& mode, const std::string& input, int budget) {
    io::GraphDoc doc = load_graph(input);
    require(doc.u && doc.v, Err::InvalidInput, "graph document lacks terminals");
    oracle::Budget b{budget};
    json out;
    if (mode == "nu") {
        out["nu"] = oracle::nu_exact(doc.graph, *doc.u, *doc.v, b);
    } else if (mode == "tau") {
        auto [tau, cover] = oracle::tau_exact(doc.graph, *doc.u, *doc.v, b);
        out["tau"] = tau;
        out["cover"] = cover.to_vector();
    } else if (mode == "exists") {
        out["exists"] = oracle::odd_trail_exists(doc.graph, *doc.u, *doc.v, b);
    } else {
        fail(Err::InvalidInput, "oracle mode must be nu, tau or exists");
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_verify(const std::string& what, const std::string& input, const std::string& claim_path,
               int oracle_budget) {
    io::GraphDoc doc = load_graph(input);
    require(doc.u && doc.v, Err::InvalidInput, "graph document lacks terminals");
    json claim = read_doc(claim_path);
    const Multigraph& g = doc.graph;
    if (what == "trails") {
        require(claim.contains("trails"), Err::InvalidInput, "claim lacks trails");
        std::vector<Trail> trails;
        for (const json& jt : claim.at("trails")) trails.push_back(io::trail_from_json(jt));
        for (const Trail& t : trails) {
            auto bad = verify_trail(g, t, {*doc.u, *doc.v}, true);
            if (bad) {
                std::cerr << "trail invalid: " << violation_name(*bad) << "\n";
                return kExitInvalid;
            }
        }
        if (!pairwise_edge_disjoint(trails)) {
            std::cerr << "trails share an edge\n";
            return kExitInvalid;
        }
        std::cout << json{{"valid", true}, {"trails", trails.size()}}.dump() << "\n";
        return 0;
    }
    if (what == "cover") {
        require(claim.contains("cover"), Err::InvalidInput, "claim lacks cover");
        EdgeSet cover(g.edge_universe());
        for (const json& je : claim.at("cover")) {
            EdgeId e = je.get<int>();
            require(e >= 0 && e < g.edge_universe() && g.edge_active(e), Err::InvalidInput,
                    "cover edge " + std::to_string(e) + " not in graph");
            cover.insert(e);
        }
        Multigraph rest = g.without_edges(cover);
        bool survives = oracle::odd_trail_exists(rest, *doc.u, *doc.v,
                                                 oracle::Budget{oracle_budget});
        if (survives) {
            std::cerr << "an odd trail survives the cover\n";
            return kExitInvalid;
        }
        std::cout << json{{"valid", true}, {"cover", cover.to_vector()}}.dump() << "\n";
        return 0;
    }
    fail(Err::InvalidInput, "verify mode must be trails or cover");
}

int run_untangle(const std::string& input, bool trace) {
    json doc = read_doc(input);
    require(doc.contains("graph") && doc.contains("trails"), Err::InvalidInput,
            "expected {\"graph\":..., \"trails\":[...]}");
    io::GraphDoc gd = io::graph_from_json(doc.at("graph"));
    require(gd.u && gd.v, Err::InvalidInput, "graph document lacks terminals");
    std::vector<Trail> trails;
    for (const json& jt : doc.at("trails")) trails.push_back(io::trail_from_json(jt));
    TrailCollection col = TrailCollection::of(gd.graph, std::move(trails), *gd.u, *gd.v);
    untangle::TraceFn fn;
    if (trace)
        fn = [](const untangle::IterationTrace& it) {
            std::cerr << json{{"iteration", it.iteration},
                              {"case", untangle::case_name(it.kind)},
                              {"contacts", it.contacts},
                              {"k_uv", it.k_uv},
                              {"phi", it.phi}}
                             .dump()
                      << "\n";
        };
    auto out = untangle::run(gd.graph, *gd.u, *gd.v, col, fn);
    json jt = json::array();
    for (const Trail& t : out) jt.push_back(io::trail_to_json(t));
    std::cout << json{{"trails", std::move(jt)}}.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd (u,v)-trail packing and covering"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a fixture instance as JSON");
    std::string family;
    int gen_k = 1, gen_m = 2, gen_n = 6, gen_edges = 10;
    uint64_t gen_seed = 1;
    double parallel_prob = 0.2, sigma_prob = 1.0;
    gen->add_option("--family", family, "fig2|fig6|hk|fig8|random")->required();
    gen->add_option("--k", gen_k, "family size parameter");
    gen->add_option("--m", gen_m, "w-path count for hk/fig8");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--n", gen_n, "random vertex count");
    gen->add_option("--edges", gen_edges, "random edge count");
    gen->add_option("--parallel-prob", parallel_prob, "random parallel edge probability");
    gen->add_option("--sigma-prob", sigma_prob, "random signed-edge probability");

    // solve
    auto* solve = app.add_subcommand("solve", "pack k odd trails or cover with <= 2k-1 edges");
    std::string solve_input;
    int solve_k = 1, apath_budget = 40, oracle_budget = 20;
    bool ss_mode = false, trace = false;
    std::vector<std::string> cd;
    solve->add_option("--input", solve_input, "graph JSON (default stdin)");
    solve->add_option("--k", solve_k, "requested packing size")->required();
    solve->add_flag("--ss", ss_mode, "solve the (s,s) problem at terminal u");
    solve->add_option("--cd", cd, "C=... D=... terminal sets")->expected(2);
    solve->add_option("--apath-budget", apath_budget, "max gadget nodes");
    solve->add_option("--oracle-budget", oracle_budget, "max edges for oracle checks");
    solve->add_flag("--trace", trace, "emit untangle iterations to stderr");

    // minmax
    auto* mm = app.add_subcommand("minmax", "evaluate the (s,s) min-max certificate");
    std::string mm_input;
    int mm_budget = 16;
    mm->add_option("--input", mm_input, "graph JSON (default stdin)");
    mm->add_option("--minmax-budget", mm_budget, "max vertices for enumeration");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact nu/tau/existence by brute force");
    std::string orc_mode, orc_input;
    int orc_budget = 20;
    orc->add_option("mode", orc_mode, "nu|tau|exists")->required();
    orc->add_option("--input", orc_input, "graph JSON (default stdin)");
    orc->add_option("--oracle-budget", orc_budget, "max edges");

    // verify
    auto* ver = app.add_subcommand("verify", "check a claimed packing or cover");
    std::string ver_what, ver_input, ver_claim;
    int ver_budget = 20;
    ver->add_option("what", ver_what, "trails|cover")->required();
    ver->add_option("--input", ver_input, "graph JSON file")->required();
    ver->add_option("--claim", ver_claim, "claim JSON (default stdin)");
    ver->add_option("--oracle-budget", ver_budget, "max edges for cover checks");

    // untangle
    auto* unt = app.add_subcommand("untangle", "convert ({u,v},{u,v})-trails to (u,v)-trails");
    std::string unt_input;
    bool unt_trace = false;
    unt->add_option("--input", unt_input, "JSON {graph, trails} (default stdin)");
    unt->add_flag("--trace", unt_trace, "emit iterations to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed())
            return run_generate(family, gen_k, gen_m, gen_seed, gen_n, gen_edges, parallel_prob,
                                sigma_prob);
        if (solve->parsed())
            return run_solve(solve_input, solve_k, ss_mode, cd, apath_budget, oracle_budget,
                             trace);
        if (mm->parsed()) return run_minmax(mm_input, mm_budget);
        if (orc->parsed()) return run_oracle(orc_mode, orc_input, orc_budget);
        if (ver->parsed()) return run_verify(ver_what, ver_input, ver_claim, ver_budget);
        if (unt->parsed()) return run_untangle(unt_input, unt_trace);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == Err::BudgetExceeded) return kExitBudget;
        if (e.code() == Err::InvalidInput || e.code() == Err::BadParameter) return kExitInvalid;
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
