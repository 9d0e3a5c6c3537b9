// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spdom/block_decomposition.hpp"
#include "spdom/exact.hpp"
#include "spdom/reductions.hpp"
#include "spdom/semipaired.hpp"

using namespace spdom;

namespace {

OracleBudget budget() {
    OracleBudget b;
    b.max_n = kOracleVertexLimit;
    return b;
}

int spd(const Graph& g) { return static_cast<int>(min_semipaired_dominating(g, budget()).size()); }
int pd(const Graph& g) { return static_cast<int>(min_paired_dominating(g, budget()).size()); }
int dom(const Graph& g) { return static_cast<int>(min_dominating_set(g, budget()).size()); }
int tau(const Graph& g) { return static_cast<int>(min_vertex_cover(g, budget()).size()); }

Graph path(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

struct Named {
    const char* name;
    Graph g;
};

std::string one_line(const Graph& g) {
    std::string s = "n=" + std::to_string(g.num_vertices()) + " edges:";
    for (const auto& [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
    return s;
}

// Connected graphs on 2..5 vertices, one per isomorphism class.
std::vector<Graph> connected_catalog() {
    std::vector<Graph> out;
    for (Vertex n = 2; n <= 5; ++n) {
        std::vector<Edge> slots;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        std::set<std::vector<Edge>> seen;
        for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<Edge> e;
            for (std::size_t b = 0; b < slots.size(); ++b)
                if (mask >> b & 1) e.push_back(slots[b]);
            const Graph g = Graph::from_edges(n, e);
            if (!is_connected(g)) continue;
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<Edge> best;
            do {
                std::vector<Edge> r;
                for (auto [u, v] : e) r.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
                std::sort(r.begin(), r.end());
                if (best.empty() || r < best) best = r;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(best).second) out.push_back(g);
        }
    }
    return out;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int failures = 0;

void report(int id, const char* name, const Outcome& o, const std::string& summary) {
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, summary.c_str());
    if (!o.pass) {
        std::printf("  counterexample: %s\n", o.detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

void gp4_identity() {
    Outcome o;
    const std::vector<Named> hs{{"K1", complete(1)}, {"K2", complete(2)}, {"P3", path(3)},
                                {"C3", cycle(3)},    {"C4", cycle(4)},    {"K4", complete(4)}};
    std::string sizes;
    for (const auto& [name, h] : hs) {
        const int got = spd(gp4(h).graph), want = 2 * h.num_vertices();
        sizes += std::string(" ") + name + "=" + std::to_string(got);
        if (got != want) o.fail(std::string(name) + ": " + std::to_string(got) + " != " + std::to_string(want));
    }
    report(1, "gp4 semipaired = 2n", o, "6 graphs," + sizes);
}

void gp5_identity() {
    Outcome o;
    const std::vector<Named> hs{{"K2", complete(2)}, {"P3", path(3)}, {"C3", cycle(3)}, {"C4", cycle(4)}};
    std::string sizes;
    for (const auto& [name, h] : hs) {
        const int got = pd(gp5(h).graph), want = 4 * h.num_vertices();
        sizes += std::string(" ") + name + "=" + std::to_string(got);
        if (got != want) o.fail(std::string(name) + ": " + std::to_string(got) + " != " + std::to_string(want));
    }
    report(2, "gp5 paired = 4n", o, "4 graphs," + sizes);
}

void padded_offsets() {
    Outcome o;
    const std::vector<Named> hs{{"K2", complete(2)}, {"P3", path(3)}, {"C3", cycle(3)}};
    for (const auto& [name, h] : hs) {
        const int n = h.num_vertices();
        const int a = pd(gp4(h).graph), a_want = 2 * n + pd(h);
        const int b = spd(gp5(h).graph), b_want = 2 * n + spd(h);
        if (a != a_want) o.fail(std::string(name) + " gp4 paired: " + std::to_string(a) + " != " + std::to_string(a_want));
        if (b != b_want)
            o.fail(std::string(name) + " gp5 semipaired: " + std::to_string(b) + " != " + std::to_string(b_want));
    }
    report(3, "padded paired/semipaired offsets", o, "K2 P3 C3, both identities");
}

void split_domination(const std::vector<Graph>& catalog) {
    Outcome o;
    for (const Graph& g : catalog) {
        const int got = spd(split_reduction(g).graph), want = 2 * dom(g);
        if (got != want) o.fail(one_line(g) + ": " + std::to_string(got) + " != " + std::to_string(want));
    }
    report(4, "split graph semipaired = 2 * domination", o, std::to_string(catalog.size()) + " connected graphs, n 2..5");
}

void apx_cover() {
    Outcome o;
    const std::vector<Named> gs{{"K2", complete(2)}, {"P3", path(3)}, {"P4", path(4)}, {"C3", cycle(3)}};
    std::string sizes;
    for (const auto& [name, g] : gs) {
        const int got = spd(apx_reduction(g).graph), want = 2 * tau(g) + 2 * g.num_vertices();
        sizes += std::string(" ") + name + "=" + std::to_string(got);
        if (got != want) o.fail(std::string(name) + ": " + std::to_string(got) + " != " + std::to_string(want));
    }
    report(5, "incidence gadget semipaired = 2 * cover + 2n", o, "4 graphs," + sizes);
}

void degree_split_identity() {
    Outcome o;
    std::vector<Graph> gs{Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})};
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const Vertex n = std::uniform_int_distribution<Vertex>(2, 9)(rng);
        gs.push_back(random_bounded_degree_graph(rng(), n, 4));
    }
    int hit = 0, bad = 0;
    for (const Graph& g : gs) {
        int k = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) k += g.degree(v) == 4;
        hit += k > 0;
        const int got = spd(degree_split(g).graph), want = spd(g) + 2 * k;
        if (got != want) {
            ++bad;
            o.fail(one_line(g) + ": split graph needs " + std::to_string(got) + ", expected " + std::to_string(want));
        }
    }
    report(6, "degree split semipaired = original + 2k", o,
           std::to_string(gs.size()) + " graphs (" + std::to_string(hit) + " with degree-4 vertices), " +
               std::to_string(bad) + " mismatches");
}

void solver_optimality() {
    Outcome o;
    std::mt19937_64 rng(3);
    const int count = 600;
    for (int i = 0; i < count; ++i) {
        const Vertex n = std::uniform_int_distribution<Vertex>(2, 14)(rng);
        const Graph g = random_block_graph(rng(), n, std::uniform_int_distribution<int>(2, 5)(rng));
        const auto s = solve_block_graph(g);
        if (auto v = verify_solution(g, s); !v) o.fail(one_line(g) + ": " + v.diagnostic);
        const int want = spd(g);
        if (static_cast<int>(s.size()) != want)
            o.fail(one_line(g) + ": solver " + std::to_string(s.size()) + " != optimum " + std::to_string(want));
    }
    report(7, "block graph solver is optimal", o, std::to_string(count) + " random block graphs, n 2..14");
}

void observation_chain() {
    Outcome o;
    std::mt19937_64 rng(8);
    const int count = 300;
    for (int i = 0; i < count; ++i) {
        const Vertex n = std::uniform_int_distribution<Vertex>(2, 12)(rng);
        const int cap = n == 2 ? 1 : std::uniform_int_distribution<int>(2, 6)(rng);
        const Graph g = random_bounded_degree_graph(rng(), n, cap);
        const int a = dom(g), b = spd(g), c = pd(g);
        if (!(a <= b && b <= c))
            o.fail(one_line(g) + ": " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c));
    }
    report(8, "domination <= semipaired <= paired", o, std::to_string(count) + " random connected graphs, n 2..12");
}

void linear_time() {
    Outcome o;
    const std::vector<Vertex> sizes{10'000, 100'000, 1'000'000};
    std::vector<double> ms;
    for (Vertex n : sizes) {
        const Graph g = random_block_graph(1, n, 4);
        std::vector<double> runs;
        for (int r = 0; r < 3; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto s = solve_block_graph(g);
            const auto t1 = std::chrono::steady_clock::now();
            if (s.size() == 0) o.fail("empty solution at n=" + std::to_string(n));
            runs.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::sort(runs.begin(), runs.end());
        ms.push_back(runs[1]);
    }
    char buf[160];
    const double r1 = ms[1] / ms[0], r2 = ms[2] / ms[1];
    std::snprintf(buf, sizeof buf, "%.1f / %.1f / %.1f ms, ratios %.2f %.2f", ms[0], ms[1], ms[2], r1, r2);
    if (r1 > 15 || r2 > 15) o.fail(std::string("growth above 15x per decade: ") + buf);
    if (ms[2] > 10'000) o.fail(std::string("n=1e6 over 10 s: ") + buf);
    report(9, "solver time grows linearly", o, buf);
}

void structural(const std::vector<Graph>& catalog) {
    Outcome o;
    int checked = 0;
    for (const Graph& g : catalog) {
        ++checked;
        if (!is_split_graph(split_reduction(g).graph)) o.fail("split: " + one_line(g));
    }
    std::mt19937_64 rng(10);
    for (int i = 0; i < 200; ++i) {
        const Vertex n = std::uniform_int_distribution<Vertex>(2, 30)(rng);
        const Graph a = random_bounded_degree_graph(rng(), n, n == 2 ? 1 : 3);
        const Graph s = split_reduction(a).graph;
        const Graph x = apx_reduction(a).graph;
        if (!is_split_graph(s)) o.fail("split: " + one_line(a));
        if (!is_bipartite(x) || x.max_degree() > 4) o.fail("incidence gadget: " + one_line(a));
        const Graph b = random_bounded_degree_graph(rng(), n, n == 2 ? 1 : 4);
        if (degree_split(b).graph.max_degree() > 3) o.fail("degree split: " + one_line(b));
        checked += 3;
    }
    report(10, "gadget structure", o, std::to_string(checked) + " generated instances");
}

}  // namespace

int main() {
    const auto catalog = connected_catalog();
    gp4_identity();
    gp5_identity();
    padded_offsets();
    split_domination(catalog);
    apx_cover();
    degree_split_identity();
    solver_optimality();
    observation_chain();
    linear_time();
    structural(catalog);
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
