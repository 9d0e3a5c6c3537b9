#include "spdom/harness.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "spdom/errors.hpp"
#include "spdom/reductions.hpp"
#include "spdom/semipaired.hpp"

namespace spdom {

bool HarnessReport::ok() const noexcept {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.ok(); });
}

SemipairedSolution corrupt_pairing(const Graph& g, const SemipairedSolution& s) {
    auto pairs = s.pairs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            for (auto [p, q] : {std::pair{Edge{a, c}, Edge{b, d}}, std::pair{Edge{a, d}, Edge{b, c}}}) {
                if (!within_distance_two(g, p.first, p.second) || !within_distance_two(g, q.first, q.second)) {
                    pairs[i] = p;
                    pairs[j] = q;
                    return SemipairedSolution::from_pairs(g.num_vertices(), std::move(pairs));
                }
            }
        }
    }
    // Every re-pairing is still legal: drop one pair but keep its vertices.
    SemipairedSolution out = s;
    if (!out.pairs.empty()) out.pairs.erase(out.pairs.begin());
    return out;
}

namespace {

struct Trial {
    std::mt19937_64 rng;
    std::string failure;  // empty: pass
    bool detour = false;

    Vertex pick(Vertex lo, Vertex hi) { return std::uniform_int_distribution<Vertex>(lo, hi)(rng); }
    std::uint64_t seed() { return rng(); }

    // Connected graph with a random degree cap in [min_cap, max_cap].
    Graph connected(Vertex n, std::int32_t min_cap, std::int32_t max_cap) {
        const std::int32_t top = std::max(min_cap, std::min<std::int32_t>(max_cap, n - 1));
        const std::int32_t cap = n <= 2 ? 1 : std::max(2, pick(min_cap, top));
        return random_bounded_degree_graph(seed(), n, cap);
    }

    bool expect(bool cond, const std::string& what, const Graph& g) {
        if (!cond && failure.empty()) failure = what + "\n" + emit_edge_list(g);
        return cond;
    }
};

using Check = std::function<void(Trial&, const HarnessOptions&)>;

std::size_t size_of(const Graph& g, Problem p, const OracleBudget& b) {
    return solve_exact(g, p, b).vertices.size();
}

std::string eq_text(const std::string& lhs, std::size_t a, std::size_t b) {
    return lhs + ": " + std::to_string(a) + " != " + std::to_string(b);
}

void block_optimality(Trial& t, const HarnessOptions& o) {
    const Graph g = random_block_graph(t.seed(), t.pick(2, o.n_max), t.pick(2, 5));
    auto sol = solve_block_graph(g);
    if (o.inject_pairing_fault) sol = corrupt_pairing(g, sol);
    const auto verdict = verify_solution(g, sol);
    if (!t.expect(verdict.ok, "solver output rejected: " + verdict.diagnostic, g)) return;
    const auto best = size_of(g, Problem::semipaired, o.budget);
    t.expect(sol.size() == best, eq_text("solver size vs oracle", sol.size(), best), g);
}

void observation_chain(Trial& t, const HarnessOptions& o) {
    const Graph g = t.connected(t.pick(2, o.n_max), 2, 5);
    const auto dom = size_of(g, Problem::domination, o.budget);
    const auto spd = size_of(g, Problem::semipaired, o.budget);
    const auto pd = size_of(g, Problem::paired, o.budget);
    t.expect(dom <= spd && spd <= pd,
             "chain broken: dom=" + std::to_string(dom) + " spd=" + std::to_string(spd) + " pd=" + std::to_string(pd), g);
}

void gp4_identity(Trial& t, const HarnessOptions& o) {
    const Vertex n = t.pick(1, std::min<Vertex>(4, o.n_max));
    const Graph h = t.connected(n, 2, 3);
    const auto gg = gp4(h);
    const auto spd = size_of(gg.graph, Problem::semipaired, o.budget);
    t.expect(spd == static_cast<std::size_t>(2 * n), eq_text("spd(gp4) vs 2n", spd, 2 * n), h);
    t.expect(verify_solution(gg.graph, gp4_witness(gg)).ok, "gp4 witness rejected", h);
}

void gp5_identity(Trial& t, const HarnessOptions& o) {
    const Vertex n = t.pick(1, std::min<Vertex>(4, o.n_max));
    const Graph h = t.connected(n, 2, 3);
    const auto gg = gp5(h);
    const auto pd = size_of(gg.graph, Problem::paired, o.budget);
    t.expect(pd == static_cast<std::size_t>(4 * n), eq_text("pd(gp5) vs 4n", pd, 4 * n), h);
    t.expect(verify_paired_solution(gg.graph, gp5_witness(gg)).ok, "gp5 witness rejected", h);
}

void padded_offset(Trial& t, const HarnessOptions& o, bool paths_of_four) {
    const Vertex n = t.pick(2, std::min<Vertex>(3, o.n_max));
    const Graph h = t.connected(n, 2, 2);
    const Problem p = paths_of_four ? Problem::paired : Problem::semipaired;
    const auto gg = paths_of_four ? gp4(h) : gp5(h);
    const auto lhs = solve_exact(gg.graph, p, o.budget);
    const auto inner = solve_exact(h, p, o.budget);
    const std::size_t rhs = 2 * n + inner.vertices.size();
    t.expect(lhs.vertices.size() == rhs, eq_text("gadget optimum vs 2n + source optimum", lhs.vertices.size(), rhs), h);
    const auto src = SemipairedSolution::from_pairs(n, inner.pairs);
    const auto grown = paths_of_four ? gp4_extend(gg, src) : gp5_extend(gg, src);
    const auto verdict = paths_of_four ? verify_paired_solution(gg.graph, grown) : verify_solution(gg.graph, grown);
    t.expect(verdict.ok, "extended source solution rejected: " + verdict.diagnostic, h);
}

void split_domination(Trial& t, const HarnessOptions& o) {
    const Vertex n = t.pick(2, std::min<Vertex>(5, o.n_max));
    const Graph g = t.connected(n, 2, 4);
    const auto gg = split_reduction(g);
    const auto dom = min_dominating_set(g, o.budget);
    const auto spd = min_semipaired_dominating(gg.graph, o.budget);
    t.expect(spd.size() == 2 * dom.size(), eq_text("spd(split) vs 2 dom", spd.size(), 2 * dom.size()), g);
    t.expect(verify_solution(gg.graph, semipd_from_dominating(gg, dom)).ok, "forward map rejected", g);
    const auto back = dominating_from_semipd(gg, spd);
    t.expect(dominates(g, back.members()) && 2 * back.size() <= spd.size(), "pull-back is not a small dominating set", g);
}

void apx_cover(Trial& t, const HarnessOptions& o) {
    const Vertex n = t.pick(2, std::min<Vertex>(5, o.n_max));
    const Graph g = t.connected(n, 2, 3);
    const auto gg = apx_reduction(g);
    const auto vc = min_vertex_cover(g, o.budget);
    const auto spd = min_semipaired_dominating(gg.graph, o.budget);
    const std::size_t rhs = 2 * vc.size() + 2 * n;
    t.expect(spd.size() == rhs, eq_text("spd(apx) vs 2 tau + 2n", spd.size(), rhs), g);
    t.expect(verify_solution(gg.graph, semipd_from_vertex_cover(g, gg, vc)).ok, "forward map rejected", g);
    const auto back = vertex_cover_from_semipd(g, gg, spd);
    t.expect(is_vertex_cover(g, back.members()) && 2 * back.size() + 2 * n <= spd.size(),
             "pull-back is not a small vertex cover", g);
}

void degree_split_identity(Trial& t, const HarnessOptions& o) {
    const Vertex n = t.pick(2, std::min<Vertex>(9, o.n_max));
    const Graph g = t.connected(n, 3, 4);
    const auto gg = degree_split(g);
    const auto k = static_cast<std::size_t>(gg.graph.num_vertices() - n) / 6;
    const auto small = min_semipaired_dominating(g, o.budget);
    const auto big = min_semipaired_dominating(gg.graph, o.budget);
    t.expect(big.size() == small.size() + 2 * k, eq_text("spd(split) vs spd + 2k", big.size(), small.size() + 2 * k), g);
    const auto down = project_semipd_degree_split(g, gg, big);
    t.expect(verify_solution(g, down).ok && down.size() + 2 * k <= big.size(), "projection exceeds |s'| - 2k", g);
    // An optimal source solution may pair two neighbors of a degree-4 vertex
    // that land on opposite ends of its gadget; lift the projected optimum then.
    SemipairedSolution source = small;
    SemipairedSolution up;
    try {
        up = lift_semipd_degree_split(g, gg, source);
    } catch (const LiftError&) {
        t.detour = true;
        source = down;
        up = lift_semipd_degree_split(g, gg, source);
    }
    t.expect(verify_solution(gg.graph, up).ok && up.size() == source.size() + 2 * k,
             "lift is not a solution of size |s| + 2k", g);
}

struct Property {
    const char* name;
    Check check;
};

const std::vector<Property>& properties() {
    static const std::vector<Property> all = {
        {"block-optimality", block_optimality},
        {"observation-chain", observation_chain},
        {"gp4-identity", gp4_identity},
        {"gp5-identity", gp5_identity},
        {"gp4-paired-offset", [](Trial& t, const HarnessOptions& o) { padded_offset(t, o, true); }},
        {"gp5-semipaired-offset", [](Trial& t, const HarnessOptions& o) { padded_offset(t, o, false); }},
        {"split-domination", split_domination},
        {"apx-vertex-cover", apx_cover},
        {"degree-split", degree_split_identity},
    };
    return all;
}

}  // namespace

std::vector<std::string> harness_properties() {
    std::vector<std::string> names;
    for (const auto& p : properties()) names.emplace_back(p.name);
    return names;
}

HarnessReport run_harness(const HarnessOptions& opt) {
    if (opt.n_max < 2) throw PreconditionError("harness needs n_max >= 2");
    if (opt.trials < 0) throw PreconditionError("trial count must be nonnegative");
    const auto known = harness_properties();
    for (const auto& name : opt.only)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw PreconditionError("unknown property " + name);

    HarnessReport report;
    if (opt.trials == 0) report.warnings.push_back("0 trials: every property passes vacuously");
    for (std::size_t pi = 0; pi < properties().size(); ++pi) {
        const auto& prop = properties()[pi];
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), prop.name) == opt.only.end()) continue;
        PropertyReport pr;
        pr.name = prop.name;
        for (std::int32_t i = 0; i < opt.trials; ++i) {
            std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                              static_cast<std::uint32_t>(pi), static_cast<std::uint32_t>(i)};
            Trial t{std::mt19937_64(seq), {}};
            ++pr.trials;
            try {
                prop.check(t, opt);
            } catch (const BudgetExceeded& e) {
                ++pr.skipped;
                continue;
            } catch (const std::exception& e) {
                t.failure = std::string("exception: ") + e.what();
            }
            if (t.detour) ++pr.detours;
            if (!t.failure.empty()) {
                if (pr.failures++ == 0) pr.counterexample = "trial " + std::to_string(i) + ": " + t.failure;
            }
        }
        if (pr.detours > 0)
            report.warnings.push_back(pr.name + ": " + std::to_string(pr.detours) +
                                      " optimal source solutions were not liftable; lifted their re-projection instead");
        if (pr.skipped > 0)
            report.warnings.push_back(pr.name + ": " + std::to_string(pr.skipped) + " trials skipped on oracle budget");
        report.properties.push_back(std::move(pr));
    }
    return report;
}

std::string format_report(const HarnessReport& r, bool machine) {
    std::string out;
    for (const auto& p : r.properties) {
        if (machine) {
            out += p.name + (p.ok() ? " pass " : " fail ") + std::to_string(p.trials) + ' ' + std::to_string(p.failures) +
                   ' ' + std::to_string(p.skipped) + '\n';
            continue;
        }
        out += (p.ok() ? "PASS " : "FAIL ") + p.name + " trials=" + std::to_string(p.trials);
        if (p.failures) out += " failures=" + std::to_string(p.failures);
        if (p.skipped) out += " skipped=" + std::to_string(p.skipped);
        out += '\n';
        if (!p.counterexample.empty()) out += "  counterexample " + p.counterexample + (p.counterexample.back() == '\n' ? "" : "\n");
    }
    for (const auto& w : r.warnings) out += (machine ? "warning " : "warning: ") + w + '\n';
    return out;
}

}  // namespace spdom
