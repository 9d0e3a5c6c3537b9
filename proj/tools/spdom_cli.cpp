// spdom: command-line front end for the semipaired domination library.
//
// Exit codes: 0 ok, 1 invalid solution / failed property, 2 parse error,
// 3 precondition violated, 4 oracle budget exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spdom/block_decomposition.hpp"
#include "spdom/errors.hpp"
#include "spdom/exact.hpp"
#include "spdom/harness.hpp"
#include "spdom/reductions.hpp"
#include "spdom/semipaired.hpp"

namespace {

using namespace spdom;

enum Exit { kOk = 0, kInvalid = 1, kParse = 2, kPrecondition = 3, kBudget = 4 };

struct Config {
    std::uint64_t seed = 7;
    std::int32_t trials = 100;
    Vertex n_max = 12;
    Vertex budget_n = kOracleVertexLimit;
    std::string format = "human";
    std::string out;

    bool lines() const { return format == "lines"; }
    OracleBudget budget() const {
        OracleBudget b;
        b.max_n = budget_n;
        return b;
    }
};

std::string join(std::span<const Vertex> vs) {
    std::string s;
    for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s.empty() ? "-" : s;
}

void print_pairs(const std::vector<Edge>& pairs, bool lines) {
    if (lines) {
        for (auto [u, v] : pairs) std::cout << "pair " << u << ' ' << v << '\n';
        return;
    }
    std::cout << "pairs:";
    for (auto [u, v] : pairs) std::cout << " (" << u << ',' << v << ')';
    std::cout << '\n';
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

int cmd_solve(const Config& c, const std::string& graph_path) {
    const Graph g = read_edge_list_file(graph_path);
    if (!is_block_graph(g)) {
        std::cerr << "error: not a connected block graph (n >= 2); use `spdom exact --problem spd` instead\n";
        return kPrecondition;
    }
    const auto sol = solve_block_graph(g);
    std::cout << "gamma_pr2 " << sol.size() << '\n';
    print_pairs(sol.pairs, c.lines());
    if (!c.out.empty()) write_solution_file(sol, c.out);
    return kOk;
}

int cmd_exact(const Config& c, const std::string& graph_path, const std::string& problem) {
    const Graph g = read_edge_list_file(graph_path);
    const auto p = parse_problem(problem);
    if (!p) throw std::invalid_argument("unknown problem " + problem);
    const auto cert = solve_exact(g, *p, c.budget());
    std::cout << problem_name(*p) << ' ' << cert.vertices.size() << '\n';
    if (c.lines()) {
        for (Vertex v : cert.vertices) std::cout << "vertex " << v << '\n';
    } else {
        std::cout << "set: " << join(cert.vertices.members()) << '\n';
    }
    if (!cert.pairs.empty()) print_pairs(cert.pairs, c.lines());
    if (!c.out.empty() && !cert.pairs.empty())
        write_solution_file(SemipairedSolution::from_pairs(g.num_vertices(), cert.pairs), c.out);
    return kOk;
}

int cmd_check(const std::string& graph_path, const std::string& solution_path, bool paired) {
    const Graph g = read_edge_list_file(graph_path);
    const auto sol = read_solution_file(solution_path, g.num_vertices());
    const auto verdict = paired ? verify_paired_solution(g, sol) : verify_solution(g, sol);
    if (verdict) {
        std::cout << "valid " << sol.size() << '\n';
        return kOk;
    }
    std::cout << "invalid: " << verdict.diagnostic << '\n';
    return kInvalid;
}

struct GenParams {
    std::string kind;
    std::string graph;
    Vertex n = 10;
    std::int32_t max_clique = 4;
    std::int32_t max_deg = 3;
};

int cmd_gen(const Config& c, const GenParams& p) {
    Graph out;
    std::string roles;
    if (p.kind == "random-block") {
        out = random_block_graph(c.seed, p.n, p.max_clique);
    } else if (p.kind == "random-deg") {
        out = random_bounded_degree_graph(c.seed, p.n, p.max_deg);
    } else {
        if (p.graph.empty()) throw std::invalid_argument("gen " + p.kind + " needs --graph");
        const Graph src = read_edge_list_file(p.graph);
        GadgetGraph gg;
        if (p.kind == "gp4") gg = gp4(src);
        else if (p.kind == "gp5") gg = gp5(src);
        else if (p.kind == "split") gg = split_reduction(src);
        else if (p.kind == "apx4") gg = apx_reduction(src);
        else if (p.kind == "degsplit") gg = degree_split(src);
        else throw std::invalid_argument("unknown generator " + p.kind);
        out = gg.graph;
        roles = emit_role_map(gg);
    }
    if (c.out.empty()) {
        std::cout << emit_edge_list(out);
        return kOk;
    }
    write_edge_list_file(out, c.out);
    if (!roles.empty()) write_text(c.out + ".roles", roles);
    std::cout << out.num_vertices() << ' ' << out.num_edges() << '\n';
    return kOk;
}

int cmd_decompose(const Config& c, const std::string& graph_path) {
    const Graph g = read_edge_list_file(graph_path);
    const auto d = decompose(g);
    for (std::size_t b = 0; b < d.num_blocks(); ++b)
        std::cout << (c.lines() ? "block " : "block " + std::to_string(b) + ": ") << join(d.block(b)) << '\n';
    std::cout << (c.lines() ? "cut " : "cut vertices: ") << join(d.cut_vertices()) << '\n';
    if (!c.lines()) std::cout << "block graph: " << (is_block_graph(g, d) ? "yes" : "no") << '\n';
    return kOk;
}

int cmd_tree(const std::string& graph_path) {
    const Graph g = read_edge_list_file(graph_path);
    const auto tree = build_block_tree(g, compute_beo(g, decompose(g)));
    std::cout << format_block_tree(tree);
    return kOk;
}

int cmd_trace(const std::string& graph_path) {
    const Graph g = read_edge_list_file(graph_path);
    const auto t = trace_block_graph(g);
    std::cout << format_trace(t);
    std::cout << "gamma_pr2 " << t.solution.size() << '\n';
    return kOk;
}

int cmd_harness(const Config& c, bool inject, const std::vector<std::string>& only) {
    HarnessOptions o;
    o.seed = c.seed;
    o.trials = c.trials;
    o.n_max = c.n_max;
    o.budget = c.budget();
    o.inject_pairing_fault = inject;
    o.only = only;
    const auto report = run_harness(o);
    std::cout << format_report(report, c.lines());
    return report.ok() ? kOk : kInvalid;
}

int cmd_bench(const Config& c, const std::vector<Vertex>& sizes, std::int32_t max_clique, std::int32_t repeats) {
    if (!c.lines()) std::cout << "n m millis\n";
    for (Vertex n : sizes) {
        const Graph g = random_block_graph(c.seed, n, max_clique);
        std::vector<double> runs;
        for (std::int32_t r = 0; r < std::max(1, repeats); ++r) {
            const auto start = std::chrono::steady_clock::now();
            const auto sol = solve_block_graph(g);
            runs.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
            if (sol.size() == 0) throw std::logic_error("empty solution");
        }
        std::nth_element(runs.begin(), runs.begin() + runs.size() / 2, runs.end());
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", runs[runs.size() / 2]);
        std::cout << n << ' ' << g.num_edges() << ' ' << ms << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semipaired domination: block-graph solver, exact oracles, reduction gadgets"};
    app.require_subcommand(1);
    app.fallthrough();

    Config c;
    app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
    app.add_option("--trials", c.trials, "Harness trials per property")->capture_default_str();
    app.add_option("--n-max", c.n_max, "Largest random instance in the harness")->capture_default_str();
    app.add_option("--budget-n", c.budget_n, "Vertex cap for the exact oracles")->capture_default_str();
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"human", "lines"}))->capture_default_str();
    app.add_option("--out", c.out, "Output path");

    std::string graph_path, solution_path, problem = "spd";
    bool paired = false, inject = false;
    std::vector<std::string> only;
    GenParams gen;
    std::vector<Vertex> sizes{10'000, 100'000, 1'000'000};
    std::int32_t bench_clique = 4, repeats = 3;

    auto* solve = app.add_subcommand("solve", "Minimum semipaired dominating set of a block graph");
    solve->add_option("graph", graph_path)->required();
    auto* exact = app.add_subcommand("exact", "Exhaustive optimum for a small graph");
    exact->add_option("graph", graph_path)->required();
    exact->add_option("--problem", problem, "dom | pd | spd | vc")->check(CLI::IsMember({"dom", "pd", "spd", "vc"}))->capture_default_str();
    auto* check = app.add_subcommand("check", "Verify a semipaired solution file");
    check->add_option("graph", graph_path)->required();
    check->add_option("solution", solution_path)->required();
    check->add_flag("--paired", paired, "Require every pair to be an edge");
    auto* gen_cmd = app.add_subcommand("gen", "Build a reduction gadget or a random instance");
    gen_cmd->add_option("kind", gen.kind)->required()->check(
        CLI::IsMember({"gp4", "gp5", "split", "apx4", "degsplit", "random-block", "random-deg"}));
    gen_cmd->add_option("--graph", gen.graph, "Source graph for gadget kinds");
    gen_cmd->add_option("--n", gen.n, "Vertex count for random kinds")->capture_default_str();
    gen_cmd->add_option("--max-clique", gen.max_clique, "Largest glued clique (random-block)")->capture_default_str();
    gen_cmd->add_option("--max-deg", gen.max_deg, "Degree cap (random-deg)")->capture_default_str();
    auto* dec = app.add_subcommand("decompose", "Blocks and cut vertices");
    dec->add_option("graph", graph_path)->required();
    auto* tree = app.add_subcommand("tree", "Block tree as `v parent level` lines");
    tree->add_option("graph", graph_path)->required();
    auto* trace = app.add_subcommand("trace", "Step-by-step solver log");
    trace->add_option("graph", graph_path)->required();
    auto* harness = app.add_subcommand("harness", "Randomized cross-checks against the exact oracles");
    harness->add_flag("--inject-pairing-fault", inject, "Corrupt solver pairings (the run must fail)");
    harness->add_option("--property", only, "Run only these properties");
    auto* bench = app.add_subcommand("bench", "Time the block-graph solver on random block graphs");
    bench->add_option("--sizes", sizes, "Vertex counts")->delimiter(',');
    bench->add_option("--max-clique", bench_clique)->capture_default_str();
    bench->add_option("--repeats", repeats, "Timed runs per size; the median is reported")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*solve) return cmd_solve(c, graph_path);
        if (*exact) return cmd_exact(c, graph_path, problem);
        if (*check) return cmd_check(graph_path, solution_path, paired);
        if (*gen_cmd) return cmd_gen(c, gen);
        if (*dec) return cmd_decompose(c, graph_path);
        if (*tree) return cmd_tree(graph_path);
        if (*trace) return cmd_trace(graph_path);
        if (*harness) return cmd_harness(c, inject, only);
        if (*bench) return cmd_bench(c, sizes, bench_clique, repeats);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const GraphError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPrecondition;
    }
    return kOk;
}
