#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spdom/block_decomposition.hpp"
#include "spdom/graph.hpp"

namespace spdom {

/// A vertex set together with an explicit partition into 2-sets.
struct SemipairedSolution {
    VertexSet vertices;
    std::vector<Edge> pairs;  // each pair (u, v) with u < v; sorted

    std::size_t size() const noexcept { return vertices.size(); }

    /// Normalizes pair orientation/order and derives `vertices` from the pairs.
    static SemipairedSolution from_pairs(Vertex n, std::vector<Edge> pairs);
};

struct Verdict {
    bool ok = false;
    std::string diagnostic;  // empty when ok

    explicit operator bool() const noexcept { return ok; }
};

/// Checks, in order: ids in range, that the pairs partition `vertices`,
/// that each pair is at distance at most 2, and that `vertices` dominates.
/// The diagnostic names the first failed condition with a witness.
Verdict verify_solution(const Graph& g, const SemipairedSolution& s);

/// As verify_solution, with pairs required to be edges (paired domination).
Verdict verify_paired_solution(const Graph& g, const SemipairedSolution& s);

/// Minimum semipaired dominating set of a connected block graph with n >= 2.
/// Throws PreconditionError otherwise. Works on a copy renumbered by
/// bfs_relabel, so id tie-breaks refer to the new numbering and the set can
/// differ from the one trace_block_graph reports (never in size).
SemipairedSolution solve_block_graph(const Graph& g);

/// Sweep over a given block tree of `g`; ties go to the smaller id of `g`.
SemipairedSolution solve_block_graph(const Graph& g, const BlockTree& tree);

/// One processed vertex of the block-tree sweep.
struct TraceStep {
    std::int32_t index = 0;      // 1-based position in the processing order
    Vertex vertex = kNoVertex;
    std::string cases;           // "-", or any of "a", "b1", "b2", "b3", "c" joined by '+'
    std::vector<Vertex> selected;
    std::vector<Vertex> newly_dominated;
    std::vector<Edge> paired;
    /// (x, value): m(x) was set to `value` (kNoVertex when cleared).
    std::vector<std::pair<Vertex, Vertex>> pending;
};

struct Trace {
    std::vector<TraceStep> steps;
    SemipairedSolution solution;
};

/// Runs the solver while recording each step and asserting the sweep
/// invariants after every step (std::logic_error on violation):
/// processed vertices are dominated and carry no pending partner request,
/// a pending request always points at a selected-but-unpaired vertex, and
/// no other vertex next to the requester is selected-but-unpaired.
Trace trace_block_graph(const Graph& g);

/// One line per step: `i v case sel=.. dom=.. pair=.. m=..` (empty lists print as '-').
std::string format_trace(const Trace& t);

/// Solution file: line 1 `k`, then k lines `u v`.
std::string emit_solution(const SemipairedSolution& s);
SemipairedSolution parse_solution(std::string_view text, Vertex n);
SemipairedSolution read_solution_file(const std::string& path, Vertex n);
void write_solution_file(const SemipairedSolution& s, const std::string& path);

}  // namespace spdom
