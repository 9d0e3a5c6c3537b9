#include "spdom/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "spdom/errors.hpp"
#include "spdom/exact.hpp"

namespace spdom {

std::string gadget_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::gp4: return "gp4";
        case GadgetKind::gp5: return "gp5";
        case GadgetKind::split: return "split";
        case GadgetKind::apx4: return "apx4";
        case GadgetKind::degsplit: return "degsplit";
    }
    return "?";
}

Vertex GadgetGraph::role(std::string_view name, std::int32_t index) const {
    for (const auto& r : roles)
        if (r.index == index && r.name == name) return r.vertex;
    throw std::out_of_range("no role " + std::string(name) + " " + std::to_string(index));
}

std::string emit_role_map(const GadgetGraph& gg) {
    std::string out;
    for (const auto& r : gg.roles)
        out += r.name + ' ' + std::to_string(r.index) + ' ' + std::to_string(r.vertex) + '\n';
    return out;
}

namespace {

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw PreconditionError(std::string(what) + " needs a connected graph");
}

void require_tag(const GadgetGraph& gg, GadgetKind k) {
    if (gg.tag != k) throw std::invalid_argument("expected a " + gadget_name(k) + " gadget, got " + gadget_name(gg.tag));
}

void require_valid(const Graph& g, const SemipairedSolution& s) {
    if (auto v = verify_solution(g, s); !v) throw std::invalid_argument("invalid solution: " + v.diagnostic);
}

// Shared shape of gp4/gp5: v_i keeps id i, then `width` named vertices per source vertex.
GadgetGraph attach_per_vertex(const Graph& h, GadgetKind tag, const std::vector<std::string>& names,
                              const std::vector<std::pair<int, int>>& local_edges) {
    require_connected(h, gadget_name(tag).c_str());
    const Vertex n = h.num_vertices();
    const auto width = static_cast<Vertex>(names.size());
    std::vector<Edge> edges = h.edges();
    GadgetGraph gg;
    gg.tag = tag;
    gg.origin_n = n;
    gg.origin.assign(static_cast<std::size_t>(n) * (width + 1), 0);
    for (Vertex i = 0; i < n; ++i) {
        gg.roles.push_back({"v", i, i});
        gg.origin[i] = i;
        auto at = [&](int local) { return local < 0 ? i : n + width * i + local; };
        for (Vertex l = 0; l < width; ++l) {
            gg.roles.push_back({names[l], i, at(l)});
            gg.origin[at(l)] = i;
        }
        for (auto [a, b] : local_edges) edges.emplace_back(at(a), at(b));
    }
    gg.graph = Graph::from_edges(n * (width + 1), edges);
    return gg;
}

}  // namespace

GadgetGraph gp4(const Graph& h) {
    // -1 is v_i itself.
    return attach_per_vertex(h, GadgetKind::gp4, {"w", "x", "y", "z"}, {{-1, 0}, {0, 1}, {1, 2}, {2, 3}});
}

GadgetGraph gp5(const Graph& h) {
    return attach_per_vertex(h, GadgetKind::gp5, {"a", "b", "c", "d", "e"}, {{-1, 2}, {2, 1}, {2, 3}, {1, 0}, {3, 4}});
}

GadgetGraph split_reduction(const Graph& g) {
    require_connected(g, "split");
    const Vertex n = g.num_vertices();
    if (n < 2) throw PreconditionError("split needs at least two vertices");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 2 * n; ++a)
        for (Vertex b = a + 1; b < 2 * n; ++b) edges.emplace_back(a, b);
    GadgetGraph gg;
    gg.tag = GadgetKind::split;
    gg.origin_n = n;
    gg.origin.resize(static_cast<std::size_t>(4) * n);
    for (Vertex i = 0; i < n; ++i) {
        const Vertex v1 = i, u1 = n + i, v2 = 2 * n + i, u2 = 3 * n + i;
        gg.roles.push_back({"v1", i, v1});
        gg.roles.push_back({"u1", i, u1});
        gg.roles.push_back({"v2", i, v2});
        gg.roles.push_back({"u2", i, u2});
        for (Vertex x : {v1, u1, v2, u2}) gg.origin[x] = i;
        edges.emplace_back(v2, i);
        edges.emplace_back(u2, n + i);
        for (Vertex j : g.neighbors(i)) {
            edges.emplace_back(v2, j);
            edges.emplace_back(u2, n + j);
        }
    }
    gg.graph = Graph::from_edges(4 * n, edges);
    return gg;
}

GadgetGraph apx_reduction(const Graph& g) {
    require_connected(g, "apx4");
    if (g.max_degree() > 3) throw PreconditionError("apx4 needs maximum degree at most 3");
    const Vertex n = g.num_vertices();
    const auto source_edges = g.edges();
    const auto m = static_cast<Vertex>(source_edges.size());
    const Vertex base = 2 * n + 2 * m;
    GadgetGraph gg;
    gg.tag = GadgetKind::apx4;
    gg.origin_n = n;
    gg.origin.assign(static_cast<std::size_t>(base) + 4 * n, kNoVertex);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        const Vertex v1 = i, v2 = n + i, w = base + 4 * i;
        gg.roles.push_back({"v1", i, v1});
        gg.roles.push_back({"v2", i, v2});
        const char* names[] = {"w", "x", "y", "z"};
        for (int l = 0; l < 4; ++l) {
            gg.roles.push_back({names[l], i, w + l});
            gg.origin[w + l] = i;
        }
        gg.origin[v1] = gg.origin[v2] = i;
        edges.insert(edges.end(), {{v1, w}, {v2, w}, {w, w + 1}, {w + 1, w + 2}, {w + 2, w + 3}});
    }
    for (Vertex j = 0; j < m; ++j) {
        const auto [a, b] = source_edges[j];
        const Vertex e1 = 2 * n + j, e2 = 2 * n + m + j;
        gg.roles.push_back({"e1", j, e1});
        gg.roles.push_back({"e2", j, e2});
        edges.insert(edges.end(), {{a, e1}, {b, e1}, {n + a, e2}, {n + b, e2}});
    }
    gg.graph = Graph::from_edges(base + 4 * n, edges);
    return gg;
}

namespace {

// Position among the degree-4 vertices, or -1.
std::vector<std::int32_t> degree_four_slots(const Graph& g) {
    std::vector<std::int32_t> slot(g.num_vertices(), -1);
    std::int32_t t = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 4) slot[v] = t++;
    return slot;
}

// Gadget vertex v_l (l = 1..7) of a degree-4 vertex in slot t.
Vertex gadget_vertex(Vertex v, Vertex n, std::int32_t t, int l) { return l == 1 ? v : n + 6 * t + (l - 2); }

Vertex port_of(const Graph& g, const std::vector<std::int32_t>& slot, Vertex a, Vertex b) {
    if (slot[a] < 0) return a;
    auto nb = g.neighbors(a);
    if (b == nb[0] || b == nb[1]) return a;
    return gadget_vertex(a, g.num_vertices(), slot[a], 6);
}

}  // namespace

GadgetGraph degree_split(const Graph& g) {
    if (g.max_degree() > 4) throw PreconditionError("degsplit needs maximum degree at most 4");
    const Vertex n = g.num_vertices();
    const auto slot = degree_four_slots(g);
    const std::int32_t k = static_cast<std::int32_t>(std::count_if(slot.begin(), slot.end(), [](auto t) { return t >= 0; }));

    GadgetGraph gg;
    gg.tag = GadgetKind::degsplit;
    gg.origin_n = n;
    gg.origin.resize(static_cast<std::size_t>(n) + 6 * k);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        gg.origin[v] = v;
        if (slot[v] < 0) {
            gg.roles.push_back({"v", v, v});
            continue;
        }
        Vertex x[8];
        for (int l = 1; l <= 7; ++l) {
            x[l] = gadget_vertex(v, n, slot[v], l);
            gg.origin[x[l]] = v;
            gg.roles.push_back({"v" + std::to_string(l), v, x[l]});
        }
        for (int l = 1; l < 6; ++l) edges.emplace_back(x[l], x[l + 1]);
        edges.emplace_back(x[7], x[3]);
        edges.emplace_back(x[7], x[4]);
    }
    for (const auto& [a, b] : g.edges()) edges.emplace_back(port_of(g, slot, a, b), port_of(g, slot, b, a));
    gg.graph = Graph::from_edges(n + 6 * k, edges);
    return gg;
}

Vertex degree_split_port(const Graph& g, const GadgetGraph& gg, Vertex a, Vertex b) {
    require_tag(gg, GadgetKind::degsplit);
    if (!g.has_edge(a, b)) throw std::invalid_argument("not an edge of the source graph");
    return port_of(g, degree_four_slots(g), a, b);
}

SemipairedSolution gp4_witness(const GadgetGraph& gg) {
    require_tag(gg, GadgetKind::gp4);
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < gg.origin_n; ++i) pairs.emplace_back(gg.role("w", i), gg.role("y", i));
    return SemipairedSolution::from_pairs(gg.graph.num_vertices(), std::move(pairs));
}

SemipairedSolution gp5_witness(const GadgetGraph& gg) {
    require_tag(gg, GadgetKind::gp5);
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < gg.origin_n; ++i) {
        pairs.emplace_back(gg.role("a", i), gg.role("b", i));
        pairs.emplace_back(gg.role("c", i), gg.role("d", i));
    }
    return SemipairedSolution::from_pairs(gg.graph.num_vertices(), std::move(pairs));
}

namespace {

SemipairedSolution extend(const GadgetGraph& gg, const SemipairedSolution& s, const char* first, const char* second) {
    std::vector<Edge> pairs = s.pairs;
    for (Vertex i = 0; i < gg.origin_n; ++i) pairs.emplace_back(gg.role(first, i), gg.role(second, i));
    return SemipairedSolution::from_pairs(gg.graph.num_vertices(), std::move(pairs));
}

}  // namespace

SemipairedSolution gp4_extend(const GadgetGraph& gg, const SemipairedSolution& s) {
    require_tag(gg, GadgetKind::gp4);
    return extend(gg, s, "x", "y");
}

SemipairedSolution gp5_extend(const GadgetGraph& gg, const SemipairedSolution& s) {
    require_tag(gg, GadgetKind::gp5);
    return extend(gg, s, "b", "d");
}

SemipairedSolution semipd_from_dominating(const GadgetGraph& gg, const VertexSet& dom) {
    require_tag(gg, GadgetKind::split);
    std::vector<Edge> pairs;
    for (Vertex i : dom) pairs.emplace_back(gg.role("v1", i), gg.role("u1", i));
    return SemipairedSolution::from_pairs(gg.graph.num_vertices(), std::move(pairs));
}

SemipairedSolution semipd_from_vertex_cover(const Graph& g, const GadgetGraph& gg, const VertexSet& vc) {
    require_tag(gg, GadgetKind::apx4);
    if (!is_vertex_cover(g, vc.members())) throw std::invalid_argument("not a vertex cover of the source graph");
    std::vector<Edge> pairs;
    for (Vertex i : vc) pairs.emplace_back(gg.role("v1", i), gg.role("v2", i));
    for (Vertex i = 0; i < gg.origin_n; ++i) pairs.emplace_back(gg.role("w", i), gg.role("y", i));
    return SemipairedSolution::from_pairs(gg.graph.num_vertices(), std::move(pairs));
}

VertexSet dominating_from_semipd(const GadgetGraph& gg, const SemipairedSolution& s) {
    require_tag(gg, GadgetKind::split);
    require_valid(gg.graph, s);
    const Vertex n = gg.origin_n;
    const Graph& h = gg.graph;
    // V side holds ids [0, n) and [2n, 3n); U side the rest.
    auto on_v_side = [n](Vertex x) { return x < n || (x >= 2 * n && x < 3 * n); };
    const auto v_count = std::count_if(s.vertices.begin(), s.vertices.end(), on_v_side);
    const bool use_v = 2 * static_cast<std::size_t>(v_count) <= s.size();
    const Vertex clique_base = use_v ? 0 : n;
    const Vertex outer_base = use_v ? 2 * n : 3 * n;

    std::vector<char> in(h.num_vertices(), 0);
    for (Vertex x : s.vertices)
        if (on_v_side(x) == use_v) in[x] = 1;
    for (Vertex i = 0; i < n; ++i) {
        const Vertex outer = outer_base + i;
        if (!in[outer]) continue;
        const auto nb = h.neighbors(outer);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex y) { return in[y]; })) {
            in[outer] = 0;
            in[clique_base + i] = 1;
        }
    }
    std::vector<Vertex> dom;
    for (Vertex i = 0; i < n; ++i)
        if (in[clique_base + i]) dom.push_back(i);
    return VertexSet(n, std::move(dom));
}

VertexSet vertex_cover_from_semipd(const Graph& g, const GadgetGraph& gg, const SemipairedSolution& s) {
    require_tag(gg, GadgetKind::apx4);
    require_valid(gg.graph, s);
    const Vertex n = g.num_vertices();
    const auto m = static_cast<Vertex>(g.num_edges());
    const Graph& h = gg.graph;
    auto side_of = [n, m](Vertex x) {
        if (x < n) return 1;
        if (x < 2 * n) return 2;
        if (x < 2 * n + m) return 1;
        if (x < 2 * n + 2 * m) return 2;
        return 0;
    };
    std::size_t count[3] = {0, 0, 0};
    for (Vertex x : s.vertices) ++count[side_of(x)];
    const int side = count[1] <= count[2] ? 1 : 2;
    const Vertex v_base = side == 1 ? 0 : n;
    const Vertex e_base = side == 1 ? 2 * n : 2 * n + m;

    std::vector<char> in(h.num_vertices(), 0);
    for (Vertex x : s.vertices)
        if (side_of(x) == side) in[x] = 1;
    const auto source_edges = g.edges();
    std::vector<Vertex> cover;
    for (Vertex i = 0; i < n; ++i)
        if (in[v_base + i]) cover.push_back(i);
    for (Vertex j = 0; j < m; ++j) {
        const auto [a, b] = source_edges[j];
        if (!in[v_base + a] && !in[v_base + b] && in[e_base + j]) cover.push_back(a);
    }
    VertexSet out(n, std::move(cover));
    if (!is_vertex_cover(g, out.members())) throw std::logic_error("pulled-back set is not a vertex cover");
    return out;
}

namespace {

struct SplitContext {
    const Graph& g;
    const GadgetGraph& gg;
    std::vector<std::int32_t> slot;

    Vertex at(Vertex v, int l) const { return gadget_vertex(v, g.num_vertices(), slot[v], l); }
};

void check_split_pair(const Graph& g, const GadgetGraph& gg) {
    require_tag(gg, GadgetKind::degsplit);
    if (gg.origin_n != g.num_vertices()) throw std::invalid_argument("gadget was not built from this graph");
}

}  // namespace

SemipairedSolution lift_semipd_degree_split(const Graph& g, const GadgetGraph& gg, const SemipairedSolution& s) {
    check_split_pair(g, gg);
    require_valid(g, s);
    const SplitContext ctx{g, gg, degree_four_slots(g)};
    const Vertex n = g.num_vertices();
    const Graph& h = gg.graph;

    std::vector<Vertex> partner(n, kNoVertex);
    for (auto [a, b] : s.pairs) {
        partner[a] = b;
        partner[b] = a;
    }
    std::vector<Vertex> split;
    for (Vertex v = 0; v < n; ++v)
        if (ctx.slot[v] >= 0) split.push_back(v);

    // Preferred case per split vertex: true = the v1 side (cases 2.1 / 2.3).
    std::vector<char> low_side(n, 0);
    for (Vertex v : split) {
        const auto nb = g.neighbors(v);
        const Vertex low[2] = {nb[0], nb[1]};
        if (partner[v] != kNoVertex) {
            const Vertex u = partner[v];
            for (Vertex w : low)
                if (u == w || g.has_edge(u, w)) low_side[v] = 1;
        } else {
            for (Vertex w : low)
                if (s.vertices.contains(w)) low_side[v] = 1;
        }
    }

    auto build = [&](const std::vector<char>& side, bool explicit_pairs) -> std::optional<SemipairedSolution> {
        std::vector<Vertex> members;
        std::vector<Edge> pairs;
        auto rep = [&](Vertex v) { return ctx.slot[v] < 0 ? v : ctx.at(v, side[v] ? 1 : 6); };
        for (Vertex v : s.vertices) members.push_back(rep(v));
        for (Vertex v : split) {
            Edge inner;
            if (partner[v] != kNoVertex)
                inner = side[v] ? Edge{ctx.at(v, 4), ctx.at(v, 6)} : Edge{ctx.at(v, 1), ctx.at(v, 3)};
            else
                inner = side[v] ? Edge{ctx.at(v, 3), ctx.at(v, 5)} : Edge{ctx.at(v, 2), ctx.at(v, 4)};
            members.push_back(inner.first);
            members.push_back(inner.second);
            pairs.push_back(inner);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (!dominates(h, members)) return std::nullopt;
        if (explicit_pairs) {
            for (auto [a, b] : s.pairs) pairs.emplace_back(rep(a), rep(b));
        } else {
            auto found = has_semipairing(h, VertexSet(h.num_vertices(), members));
            if (!found) return std::nullopt;
            pairs = std::move(*found);
        }
        auto out = SemipairedSolution::from_pairs(h.num_vertices(), std::move(pairs));
        if (!verify_solution(h, out)) return std::nullopt;
        return out;
    };

    if (auto direct = build(low_side, true)) return *direct;

    // Some pair runs through a split vertex whose two ports differ; search
    // the case combinations and let a fresh pairing decide.
    if (auto out = build(low_side, false)) return *out;
    const std::size_t k = split.size();
    if (k <= 12) {
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            auto side = low_side;
            for (std::size_t b = 0; b < k; ++b)
                if (mask >> b & 1) side[split[b]] ^= 1;
            if (auto out = build(side, false)) return *out;
        }
    }
    for (auto [a, b] : s.pairs) {
        if (g.has_edge(a, b)) continue;
        for (Vertex w : g.neighbors(a))
            if (ctx.slot[w] >= 0 && g.has_edge(w, b) && port_of(g, ctx.slot, w, a) != port_of(g, ctx.slot, w, b))
                throw LiftError("pair (" + std::to_string(a) + "," + std::to_string(b) + ") runs through split vertex " +
                                std::to_string(w));
    }
    throw LiftError("no case assignment lifts this solution");
}

SemipairedSolution project_semipd_degree_split(const Graph& g, const GadgetGraph& gg, const SemipairedSolution& s) {
    check_split_pair(g, gg);
    require_valid(gg.graph, s);
    const Vertex n = g.num_vertices();

    std::vector<std::int32_t> phi(n, 0);
    for (Vertex x : s.vertices) ++phi[gg.origin[x]];
    std::vector<char> in(n, 0);
    const auto slot = degree_four_slots(g);
    for (Vertex v = 0; v < n; ++v) in[v] = slot[v] < 0 ? phi[v] > 0 : phi[v] >= 3;

    // Image of the gadget pairing, where both ends survive.
    std::vector<Vertex> partner(n, kNoVertex);
    for (auto [a, b] : s.pairs) {
        const Vertex x = gg.origin[a], y = gg.origin[b];
        if (x == y || !in[x] || !in[y] || partner[x] != kNoVertex || partner[y] != kNoVertex) continue;
        if (!within_distance_two(g, x, y)) continue;
        partner[x] = y;
        partner[y] = x;
    }
    std::vector<Vertex> loose;
    for (Vertex v = 0; v < n; ++v)
        if (in[v] && partner[v] == kNoVertex) loose.push_back(v);
    for (std::size_t i = 0; i < loose.size(); ++i) {
        const Vertex a = loose[i];
        if (partner[a] != kNoVertex) continue;
        for (std::size_t j = i + 1; j < loose.size(); ++j) {
            const Vertex b = loose[j];
            if (partner[b] == kNoVertex && within_distance_two(g, a, b)) {
                partner[a] = b;
                partner[b] = a;
                break;
            }
        }
    }

    auto current = [&] {
        std::vector<Vertex> d;
        for (Vertex v = 0; v < n; ++v)
            if (in[v]) d.push_back(v);
        return d;
    };
    for (Vertex y : loose) {
        if (partner[y] != kNoVertex) continue;
        in[y] = 0;
        if (dominates(g, current())) continue;
        in[y] = 1;
        const auto dist = bfs_distances(g, y);
        Vertex pick = kNoVertex;
        for (Vertex u : g.neighbors(y))
            if (!in[u]) {
                pick = u;
                break;
            }
        for (Vertex u = 0; u < n && pick == kNoVertex; ++u)
            if (!in[u] && dist[u] == 2) pick = u;
        if (pick == kNoVertex) throw std::runtime_error("projection could not repair vertex " + std::to_string(y));
        in[pick] = 1;
        partner[y] = pick;
        partner[pick] = y;
    }

    std::vector<Edge> pairs;
    for (Vertex v = 0; v < n; ++v)
        if (in[v] && partner[v] > v) pairs.emplace_back(v, partner[v]);
    auto out = SemipairedSolution::from_pairs(n, std::move(pairs));
    if (auto verdict = verify_solution(g, out); !verdict)
        throw std::logic_error("projected set is invalid: " + verdict.diagnostic);
    return out;
}

bool is_split_graph(const Graph& g) {
    std::vector<std::int64_t> d(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    std::int64_t m = 0;
    while (m < static_cast<std::int64_t>(d.size()) && d[m] >= m) ++m;
    const std::int64_t head = std::accumulate(d.begin(), d.begin() + m, std::int64_t{0});
    const std::int64_t tail = std::accumulate(d.begin() + m, d.end(), std::int64_t{0});
    return head == m * (m - 1) + tail;
}

bool is_bipartite(const Graph& g) {
    std::vector<std::int8_t> color(g.num_vertices(), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = static_cast<std::int8_t>(1 - color[u]);
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph random_block_graph(std::uint64_t seed, Vertex n_target, std::int32_t max_clique) {
    if (n_target < 2 || max_clique < 2) throw PreconditionError("random block graph needs n >= 2 and cliques >= 2");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    Vertex n = 1;
    std::vector<Vertex> clique;
    while (n < n_target) {
        const std::int32_t top = std::min<std::int64_t>(max_clique, n_target - n + 1);
        const auto size = std::uniform_int_distribution<std::int32_t>(2, top)(rng);
        clique.assign(1, std::uniform_int_distribution<Vertex>(0, n - 1)(rng));
        for (std::int32_t i = 1; i < size; ++i) clique.push_back(n++);
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) edges.emplace_back(clique[a], clique[b]);
    }
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    for (auto& [a, b] : edges) {
        a = label[a];
        b = label[b];
    }
    return Graph::from_edges(n, edges);
}

Graph random_bounded_degree_graph(std::uint64_t seed, Vertex n, std::int32_t max_deg) {
    if (n < 1 || max_deg < 1) throw PreconditionError("random graph needs n >= 1 and a degree cap >= 1");
    if (max_deg == 1 && n > 2) throw PreconditionError("degree cap 1 admits no connected graph on more than 2 vertices");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::int32_t> deg(n, 0);
    std::vector<Edge> edges;
    std::vector<Vertex> open{order[0]};  // tree vertices still below the cap
    for (Vertex i = 1; i < n; ++i) {
        const auto pos = std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng);
        const Vertex p = open[pos];
        const Vertex v = order[i];
        edges.emplace_back(std::min(p, v), std::max(p, v));
        ++deg[v];
        if (++deg[p] == max_deg) {
            open[pos] = open.back();
            open.pop_back();
        }
        if (deg[v] < max_deg) open.push_back(v);
    }

    std::vector<Edge> present = edges;
    std::sort(present.begin(), present.end());
    const auto extra = std::uniform_int_distribution<Vertex>(0, n)(rng);
    std::uniform_int_distribution<Vertex> any(0, n - 1);
    for (Vertex tries = 0, added = 0; tries < 4 * extra && added < extra; ++tries) {
        Vertex a = any(rng), b = any(rng);
        if (a == b || deg[a] >= max_deg || deg[b] >= max_deg) continue;
        if (a > b) std::swap(a, b);
        const auto it = std::lower_bound(present.begin(), present.end(), Edge{a, b});
        if (it != present.end() && *it == Edge{a, b}) continue;
        present.insert(it, {a, b});
        edges.emplace_back(a, b);
        ++deg[a];
        ++deg[b];
        ++added;
    }
    return Graph::from_edges(n, edges);
}

}  // namespace spdom
