#include "spdom/exact.hpp"

#include <bit>
#include <cstdint>

#include "spdom/errors.hpp"

namespace spdom {

BudgetExceeded::BudgetExceeded(BudgetCap cap, const std::string& detail)
    : std::runtime_error("budget exceeded (" + to_string(cap) + "): " + detail), cap_(cap) {}

std::string to_string(BudgetCap cap) {
    switch (cap) {
        case BudgetCap::vertices: return "max_n";
        case BudgetCap::subset_size: return "max_subset_size";
        case BudgetCap::time: return "time_limit";
    }
    return "?";
}

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::domination: return "dom";
        case Problem::paired: return "pd";
        case Problem::semipaired: return "spd";
        case Problem::vertex_cover: return "vc";
    }
    return "?";
}

std::optional<Problem> parse_problem(std::string_view name) {
    for (Problem p : {Problem::domination, Problem::paired, Problem::semipaired, Problem::vertex_cover})
        if (problem_name(p) == name) return p;
    return std::nullopt;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

bool needs_pairs(Problem p) { return p == Problem::paired || p == Problem::semipaired; }

// Include/exclude search over vertex ids in ascending order. Taking a vertex
// before skipping it makes the first hit the lexicographically smallest set.
class SubsetSearch {
public:
    SubsetSearch(const Graph& g, Problem p, Clock::time_point deadline) : p_(p), n_(g.num_vertices()), deadline_(deadline) {
        all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        closed_.resize(n_);
        open_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex w : g.neighbors(v)) open_[v] |= bit(w);
            closed_[v] = open_[v] | bit(v);
        }
        partner_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            if (p == Problem::paired) {
                partner_[v] = open_[v];
            } else if (p == Problem::semipaired) {
                Mask reach = closed_[v];
                for (Vertex w : g.neighbors(v)) reach |= closed_[w];
                partner_[v] = reach & ~bit(v);
            }
        }
        // A vertex whose whole closed neighborhood is behind the cursor can no longer be dominated.
        dies_at_.assign(n_, 0);
        for (Vertex u = 0; u < n_; ++u) dies_at_[63 - std::countl_zero(closed_[u])] |= bit(u);
        reach_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (Vertex v = n_ - 1; v >= 0; --v) {
            const int cover = p == Problem::vertex_cover ? std::popcount(open_[v]) : std::popcount(closed_[v]);
            reach_[v] = std::max(reach_[v + 1], cover);
        }
    }

    std::optional<Certificate> run(std::int32_t k) {
        k_ = k;
        found_.reset();
        if (k < 0 || k > n_) return std::nullopt;
        if (needs_pairs(p_) && k % 2 != 0) return std::nullopt;
        const bool hit = p_ == Problem::vertex_cover ? cover(0, k, 0, 0) : dominate(0, k, 0, 0);
        if (!hit) return std::nullopt;
        return found_;
    }

private:
    void tick() {
        if ((++nodes_ & 0x3fff) == 0 && Clock::now() > deadline_)
            throw BudgetExceeded(BudgetCap::time, "search for size " + std::to_string(k_) + " timed out");
    }

    Mask above(Vertex pos) const { return pos >= 63 ? Mask{0} : all_ & ~(bit(pos + 1) - 1); }

    bool dominate(Vertex pos, std::int32_t left, Mask chosen, Mask dominated) {
        tick();
        if (left == 0) {
            if (dominated != all_) return false;
            return accept(chosen);
        }
        if (n_ - pos < left) return false;
        if (std::popcount(all_ & ~dominated) > left * reach_[pos]) return false;

        const Mask later = above(pos);
        const bool pairs = needs_pairs(p_);
        if (!pairs || (partner_[pos] & (chosen | later)) != 0)
            if (dominate(pos + 1, left - 1, chosen | bit(pos), dominated | closed_[pos])) return true;

        if ((dies_at_[pos] & ~dominated) != 0) return false;
        if (pairs) {
            for (Mask m = partner_[pos] & chosen; m; m &= m - 1) {
                const int v = std::countr_zero(m);
                if ((partner_[v] & (chosen | later)) == 0) return false;
            }
        }
        return dominate(pos + 1, left, chosen, dominated);
    }

    bool cover(Vertex pos, std::int32_t left, Mask chosen, Mask forced) {
        tick();
        if (left == 0) {
            for (Vertex v = 0; v < n_; ++v)
                if (!(chosen & bit(v)) && (open_[v] & ~chosen) != 0) return false;
            return accept(chosen);
        }
        if (n_ - pos < left) return false;
        if (std::popcount(forced) > left) return false;

        if (cover(pos + 1, left - 1, chosen | bit(pos), forced & ~bit(pos))) return true;

        if (forced & bit(pos)) return false;
        const Mask earlier = bit(pos) - 1;
        if ((open_[pos] & earlier & ~chosen) != 0) return false;
        return cover(pos + 1, left, chosen, forced | (open_[pos] & above(pos)));
    }

    bool accept(Mask chosen) {
        std::vector<Edge> pairs;
        if (needs_pairs(p_) && !match(chosen, pairs)) return false;
        std::vector<Vertex> members;
        for (Mask m = chosen; m; m &= m - 1) members.push_back(std::countr_zero(m));
        found_ = Certificate{VertexSet(n_, std::move(members)), std::move(pairs)};
        return true;
    }

    bool match(Mask rest, std::vector<Edge>& out) {
        if (rest == 0) return true;
        const int i = std::countr_zero(rest);
        rest &= ~bit(i);
        for (Mask c = partner_[i] & rest; c; c &= c - 1) {
            const int j = std::countr_zero(c);
            out.emplace_back(i, j);
            if (match(rest & ~bit(j), out)) return true;
            out.pop_back();
        }
        return false;
    }

    Problem p_;
    Vertex n_;
    Clock::time_point deadline_;
    Mask all_ = 0;
    std::vector<Mask> closed_, open_, partner_, dies_at_;
    std::vector<int> reach_;
    std::int32_t k_ = 0;
    std::uint64_t nodes_ = 0;
    std::optional<Certificate> found_;
};

void check_limits(const Graph& g, Problem p, const OracleBudget& b) {
    const Vertex cap = std::min(b.max_n, kOracleVertexLimit);
    if (g.num_vertices() > cap)
        throw BudgetExceeded(BudgetCap::vertices,
                             std::to_string(g.num_vertices()) + " vertices > " + std::to_string(cap));
    if (needs_pairs(p) && (g.num_vertices() < 2 || has_isolated_vertex(g)))
        throw PreconditionError(problem_name(p) + " needs a graph without isolated vertices");
}

}  // namespace

std::optional<Certificate> find_of_size(const Graph& g, Problem p, std::int32_t k, const OracleBudget& b) {
    check_limits(g, p, b);
    if (k > b.max_subset_size)
        throw BudgetExceeded(BudgetCap::subset_size, "size " + std::to_string(k) + " > " +
                                                         std::to_string(b.max_subset_size));
    SubsetSearch search(g, p, Clock::now() + b.time_limit);
    return search.run(k);
}

Certificate solve_exact(const Graph& g, Problem p, const OracleBudget& b) {
    check_limits(g, p, b);
    SubsetSearch search(g, p, Clock::now() + b.time_limit);
    const std::int32_t step = needs_pairs(p) ? 2 : 1;
    std::int32_t k = needs_pairs(p) ? 2 : 0;
    for (; k <= g.num_vertices(); k += step) {
        if (k > b.max_subset_size)
            throw BudgetExceeded(BudgetCap::subset_size, "no solution up to size " + std::to_string(k - step));
        if (auto hit = search.run(k)) return *hit;
    }
    throw PreconditionError("no " + problem_name(p) + " solution exists");
}

VertexSet min_dominating_set(const Graph& g, const OracleBudget& b) {
    return solve_exact(g, Problem::domination, b).vertices;
}

VertexSet min_vertex_cover(const Graph& g, const OracleBudget& b) {
    return solve_exact(g, Problem::vertex_cover, b).vertices;
}

SemipairedSolution min_semipaired_dominating(const Graph& g, const OracleBudget& b) {
    auto c = solve_exact(g, Problem::semipaired, b);
    return SemipairedSolution::from_pairs(g.num_vertices(), std::move(c.pairs));
}

SemipairedSolution min_paired_dominating(const Graph& g, const OracleBudget& b) {
    auto c = solve_exact(g, Problem::paired, b);
    return SemipairedSolution::from_pairs(g.num_vertices(), std::move(c.pairs));
}

namespace {

bool pair_up(const std::vector<std::vector<char>>& ok, std::vector<char>& used, std::vector<std::pair<int, int>>& out) {
    const auto k = static_cast<int>(used.size());
    int i = 0;
    while (i < k && used[i]) ++i;
    if (i == k) return true;
    used[i] = 1;
    for (int j = i + 1; j < k; ++j) {
        if (used[j] || !ok[i][j]) continue;
        used[j] = 1;
        out.emplace_back(i, j);
        if (pair_up(ok, used, out)) return true;
        out.pop_back();
        used[j] = 0;
    }
    used[i] = 0;
    return false;
}

}  // namespace

std::optional<std::vector<Edge>> has_semipairing(const Graph& g, const VertexSet& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("semipairing needs an even number of vertices");
    const auto members = s.members();
    const auto k = members.size();
    std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            ok[i][j] = ok[j][i] = within_distance_two(g, members[i], members[j]);
    std::vector<char> used(k, 0);
    std::vector<std::pair<int, int>> idx;
    if (!pair_up(ok, used, idx)) return std::nullopt;
    std::vector<Edge> pairs;
    for (auto [i, j] : idx) pairs.emplace_back(members[i], members[j]);
    return pairs;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : set) {
        if (!g.contains(v)) return false;
        in[v] = 1;
    }
    for (const auto& [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

}  // namespace spdom
