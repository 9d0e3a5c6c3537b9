#include <doctest.h>

#include <functional>
#include <random>

#include "naive_oracle.hpp"
#include "spdom/errors.hpp"
#include "spdom/exact.hpp"
#include "spdom/reductions.hpp"

using namespace spdom;

namespace {

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

std::vector<Vertex> ids(const VertexSet& s) { return {s.begin(), s.end()}; }

OracleBudget wide() {
    OracleBudget b;
    b.max_n = kOracleVertexLimit;
    return b;
}

// Lexicographically smallest minimum set by plain enumeration of k-subsets.
std::vector<Vertex> lex_min(const Graph& g, int k, bool cover) {
    const Vertex n = g.num_vertices();
    std::vector<Vertex> pick(k);
    std::function<bool(int, Vertex)> go = [&](int i, Vertex from) -> bool {
        if (i == k) {
            std::uint32_t mask = 0;
            for (Vertex v : pick) mask |= 1u << v;
            return cover ? naive::covers(g, mask) : naive::dominating(g, mask);
        }
        for (Vertex v = from; v < n; ++v) {
            pick[i] = v;
            if (go(i + 1, v + 1)) return true;
        }
        return false;
    };
    REQUIRE(go(0, 0));
    return pick;
}

}  // namespace

TEST_CASE("domination optimum") {
    const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(ids(min_dominating_set(star)) == std::vector<Vertex>{0});
    CHECK(naive::gamma(path(6)) == 2);
    CHECK(ids(min_dominating_set(path(6))) == std::vector<Vertex>{1, 4});
    CHECK(naive::gamma(cycle(4)) == 2);
    CHECK(min_dominating_set(cycle(4)).size() == 2);
}

TEST_CASE("semipairing search") {
    CHECK_FALSE(has_semipairing(path(6), VertexSet(6, {1, 4})).has_value());
    const auto two = has_semipairing(path(6), VertexSet(6, {1, 2, 4, 5}));
    REQUIRE(two.has_value());
    CHECK(*two == std::vector<Edge>{{1, 2}, {4, 5}});
    CHECK(has_semipairing(cycle(4), VertexSet(4, {0, 2})).has_value());
    CHECK_THROWS_AS(has_semipairing(path(6), VertexSet(6, {1, 2, 4})), std::invalid_argument);
}

TEST_CASE("semipaired and paired optima") {
    const auto g4 = gp4(cycle(4)).graph;
    CHECK(g4.num_vertices() == 20);
    const auto s = min_semipaired_dominating(g4);
    CHECK(s.size() == 8);
    CHECK(verify_solution(g4, s).ok);
    CHECK(min_semipaired_dominating(path(2)).size() == 2);
    CHECK(naive::gamma_pr2(path(6)) == 4);
    CHECK(min_semipaired_dominating(path(6)).size() == 4);

    const auto g5 = gp5(cycle(4)).graph;
    OracleBudget b = wide();
    const auto p = min_paired_dominating(g5, b);
    CHECK(p.size() == 16);
    CHECK(verify_paired_solution(g5, p).ok);
    CHECK(min_paired_dominating(path(2)).size() == 2);
    CHECK(naive::gamma_pr(cycle(4)) == 2);
    CHECK(min_paired_dominating(cycle(4)).size() == 2);

    CHECK_THROWS_AS(min_semipaired_dominating(Graph::from_edges(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("vertex cover optimum") {
    CHECK(ids(min_vertex_cover(path(3))) == std::vector<Vertex>{1});
    CHECK(min_vertex_cover(path(2)).size() == 1);
    CHECK(naive::tau(cycle(5)) == 3);
    CHECK(min_vertex_cover(cycle(5)).size() == 3);
    CHECK(min_vertex_cover(Graph::from_edges(3, {})).size() == 0);
    const std::vector<Vertex> mid{1};
    CHECK(is_vertex_cover(path(3), mid));
    CHECK_FALSE(is_vertex_cover(path(4), mid));
}

TEST_CASE("budget caps") {
    OracleBudget tight;
    tight.max_n = 5;
    try {
        min_dominating_set(path(6), tight);
        FAIL("expected a budget error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.cap() == BudgetCap::vertices);
    }
    OracleBudget small;
    small.max_subset_size = 1;
    try {
        min_dominating_set(path(6), small);
        FAIL("expected a budget error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.cap() == BudgetCap::subset_size);
    }
    OracleBudget huge = wide();
    huge.max_n = 100;
    CHECK_THROWS_AS(min_dominating_set(path(65), huge), BudgetExceeded);
}

TEST_CASE("problem names") {
    for (auto p : {Problem::domination, Problem::paired, Problem::semipaired, Problem::vertex_cover})
        CHECK(parse_problem(problem_name(p)) == p);
    CHECK_FALSE(parse_problem("xyz").has_value());
}

TEST_CASE("exact solvers agree with plain enumeration") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const Vertex n = std::uniform_int_distribution<Vertex>(2, 10)(rng);
        const Graph g = random_bounded_degree_graph(rng(), n, std::uniform_int_distribution<int>(1, 5)(rng) + (n > 2));
        INFO(emit_edge_list(g));
        const int dom = naive::gamma(g), pd = naive::gamma_pr(g), spd = naive::gamma_pr2(g), tau = naive::tau(g);

        const auto d = min_dominating_set(g);
        CHECK(static_cast<int>(d.size()) == dom);
        CHECK(ids(d) == lex_min(g, dom, false));
        CHECK_FALSE(find_of_size(g, Problem::domination, dom - 1).has_value());

        const auto c = min_vertex_cover(g);
        CHECK(static_cast<int>(c.size()) == tau);
        CHECK(ids(c) == lex_min(g, tau, true));

        const auto s = min_semipaired_dominating(g);
        CHECK(static_cast<int>(s.size()) == spd);
        CHECK(verify_solution(g, s).ok);
        CHECK_FALSE(find_of_size(g, Problem::semipaired, spd - 2).has_value());

        const auto p = min_paired_dominating(g);
        CHECK(static_cast<int>(p.size()) == pd);
        CHECK(verify_paired_solution(g, p).ok);
        CHECK_FALSE(find_of_size(g, Problem::paired, pd - 2).has_value());

        CHECK(dom <= spd);
        CHECK(spd <= pd);
    }
}
