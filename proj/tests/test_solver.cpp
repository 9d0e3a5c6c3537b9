#include <doctest.h>

#include "naive_oracle.hpp"
#include "spdom/errors.hpp"
#include "spdom/reductions.hpp"
#include "spdom/semipaired.hpp"

using namespace spdom;

namespace {

Graph path(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

SemipairedSolution pairs(Vertex n, std::vector<Edge> p) { return SemipairedSolution::from_pairs(n, std::move(p)); }

}  // namespace

TEST_CASE("solver on small block graphs") {
    const auto p2 = solve_block_graph(path(2));
    CHECK(p2.pairs == std::vector<Edge>{{0, 1}});
    CHECK(p2.size() == 2);

    // Each pendant branch needs two vertices, plus an optimal pairing of P2.
    const auto g5 = gp5(path(2)).graph;
    CHECK(g5.num_vertices() == 12);
    CHECK(solve_block_graph(g5).size() == 6);

    const Graph bt = bowtie();
    CHECK(naive::gamma_pr2(bt) == 2);
    const auto sb = solve_block_graph(bt);
    CHECK(sb.size() == 2);
    CHECK(sb.vertices.contains(2));
    CHECK(verify_solution(bt, sb).ok);

    CHECK(naive::gamma_pr2(path(6)) == 4);
    CHECK(solve_block_graph(path(6)).size() == 4);
}

TEST_CASE("solver preconditions") {
    CHECK_THROWS_AS(solve_block_graph(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), PreconditionError);
    CHECK_THROWS_AS(solve_block_graph(Graph::from_edges(1, {})), PreconditionError);
    CHECK_THROWS_AS(solve_block_graph(Graph::from_edges(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST_CASE("verify_solution diagnostics") {
    CHECK(verify_solution(path(2), pairs(2, {{0, 1}})).ok);

    const auto far = verify_solution(path(6), pairs(6, {{1, 4}}));
    CHECK_FALSE(far.ok);
    CHECK(far.diagnostic == "pair (1,4) at distance 3 > 2");

    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(verify_solution(c4, pairs(4, {{0, 1}})).ok);

    const auto undominated = verify_solution(path(6), pairs(6, {{1, 2}}));
    CHECK(undominated.diagnostic == "vertex 4 is not dominated");

    SemipairedSolution loose = pairs(4, {{0, 1}});
    loose.vertices = VertexSet(4, {0, 1, 2});
    CHECK(verify_solution(c4, loose).diagnostic == "vertex 2 has no partner");

    CHECK(verify_paired_solution(c4, pairs(4, {{0, 2}})).diagnostic == "pair (0,2) is not an edge");
    CHECK(verify_solution(c4, pairs(4, {{0, 2}})).ok);
}

TEST_CASE("solution file round trip") {
    const auto s = pairs(6, {{4, 5}, {1, 0}});
    CHECK(emit_solution(s) == "2\n0 1\n4 5\n");
    CHECK(parse_solution(emit_solution(s), 6).pairs == s.pairs);
    CHECK_THROWS_AS(parse_solution("1\n0 6\n", 6), ParseError);
    CHECK_THROWS_AS(parse_solution("2\n0 1\n", 6), ParseError);
    CHECK_THROWS_AS(parse_solution("x\n", 6), ParseError);
}

TEST_CASE("trace of P2 and of a star rooted at its center") {
    const auto t2 = trace_block_graph(path(2));
    REQUIRE(t2.steps.size() == 2);
    CHECK(t2.steps[0].cases == "a");
    CHECK(t2.solution.size() == 2);

    // Center 3 is the last vertex of the elimination order.
    const Graph star = Graph::from_edges(4, {{0, 3}, {1, 3}, {2, 3}});
    const auto ts = trace_block_graph(star);
    REQUIRE(ts.steps.size() == 4);
    CHECK(ts.steps[0].cases == "a");
    CHECK(ts.steps[0].selected == std::vector<Vertex>{3});
    CHECK(ts.steps[0].pending == std::vector<std::pair<Vertex, Vertex>>{{3, 3}});
    CHECK(ts.steps[1].cases == "-");
    CHECK(ts.steps[2].cases == "-");
    CHECK(ts.steps[3].vertex == 3);
    CHECK(ts.steps[3].cases == "b3");
    CHECK(ts.steps[3].paired == std::vector<Edge>{{0, 3}});
    CHECK(ts.solution.pairs == std::vector<Edge>{{0, 3}});
}

TEST_CASE("trace has one step per vertex on a 20-vertex block graph") {
    const Graph g = random_block_graph(20, 20, 4);
    const auto t = trace_block_graph(g);
    CHECK(t.steps.size() == 20);
    CHECK(t.solution.pairs == solve_block_graph(g, build_block_tree(g, compute_beo(g, decompose(g)))).pairs);
    CHECK(t.solution.size() == solve_block_graph(g).size());
}

TEST_CASE("solve runs the sweep on the BFS-renumbered copy") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Graph g = random_block_graph(seed, 30, 4);
        const auto r = bfs_relabel(g);
        auto pairs = trace_block_graph(r.graph).solution.pairs;
        for (auto& [a, b] : pairs) {
            a = r.order[a];
            b = r.order[b];
        }
        CHECK(solve_block_graph(g).pairs == SemipairedSolution::from_pairs(30, pairs).pairs);
    }
}

TEST_CASE("solver matches the naive optimum on random block graphs") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const Vertex n = 2 + static_cast<Vertex>(seed % 11);
        const Graph g = random_block_graph(seed * 7919, n, 2 + static_cast<std::int32_t>(seed % 4));
        const auto t = trace_block_graph(g);  // asserts the sweep invariants at every step
        const auto& sol = t.solution;
        INFO(emit_edge_list(g));
        CHECK(verify_solution(g, sol).ok);
        CHECK(sol.size() % 2 == 0);
        CHECK(static_cast<int>(sol.size()) == naive::gamma_pr2(g));
    }
}

TEST_CASE("solver output stays valid on a large block graph") {
    const Graph g = random_block_graph(99, 100'000, 5);
    const auto sol = solve_block_graph(g);
    CHECK(verify_solution(g, sol).ok);
    CHECK(sol.size() % 2 == 0);
}
