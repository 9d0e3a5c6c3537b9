#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spdom/graph.hpp"
#include "spdom/semipaired.hpp"

namespace spdom {

/// Caps for the exhaustive solvers. Searches abort with BudgetExceeded once
/// any cap is hit.
struct OracleBudget {
    Vertex max_n = 22;
    std::int32_t max_subset_size = 64;
    std::chrono::milliseconds time_limit{60'000};
};

/// Largest graph the exhaustive solvers accept, whatever the budget says.
inline constexpr Vertex kOracleVertexLimit = 64;

enum class BudgetCap { vertices, subset_size, time };

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(BudgetCap cap, const std::string& detail);
    BudgetCap cap() const noexcept { return cap_; }

private:
    BudgetCap cap_;
};

std::string to_string(BudgetCap cap);

enum class Problem {
    domination,       // any dominating set
    paired,           // partner pairs must be edges
    semipaired,       // partner pairs at distance <= 2
    vertex_cover,
};

/// Short CLI name ("dom", "pd", "spd", "vc") and back.
std::string problem_name(Problem p);
std::optional<Problem> parse_problem(std::string_view name);

/// Lexicographically smallest feasible set of exactly `k` vertices, or
/// nullopt when none exists. For the pairing problems the result also
/// carries a partition into pairs.
struct Certificate {
    VertexSet vertices;
    std::vector<Edge> pairs;
};
std::optional<Certificate> find_of_size(const Graph& g, Problem p, std::int32_t k, const OracleBudget& b = {});

/// Minimum-size solution, searched in ascending size; ties broken toward
/// the lexicographically smallest vertex set.
Certificate solve_exact(const Graph& g, Problem p, const OracleBudget& b = {});

VertexSet min_dominating_set(const Graph& g, const OracleBudget& b = {});
VertexSet min_vertex_cover(const Graph& g, const OracleBudget& b = {});
SemipairedSolution min_semipaired_dominating(const Graph& g, const OracleBudget& b = {});
SemipairedSolution min_paired_dominating(const Graph& g, const OracleBudget& b = {});

/// Partition of `s` into pairs at distance <= 2 in `g`, found by
/// backtracking; nullopt when impossible. Throws std::invalid_argument on
/// odd |s|.
std::optional<std::vector<Edge>> has_semipairing(const Graph& g, const VertexSet& s);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> set);

}  // namespace spdom
