#include "spdom/semipaired.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "spdom/errors.hpp"

namespace spdom {

SemipairedSolution SemipairedSolution::from_pairs(Vertex n, std::vector<Edge> pairs) {
    std::vector<Vertex> members;
    members.reserve(pairs.size() * 2);
    for (auto& [u, v] : pairs) {
        if (u > v) std::swap(u, v);
        members.push_back(u);
        members.push_back(v);
    }
    std::sort(pairs.begin(), pairs.end());
    return {VertexSet(n, std::move(members)), std::move(pairs)};
}

namespace {

std::string edge_text(Edge e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; }

Verdict fail(std::string why) { return {false, std::move(why)}; }

Verdict verify_impl(const Graph& g, const SemipairedSolution& s, bool require_edges) {
    const Vertex n = g.num_vertices();
    for (Vertex v : s.vertices)
        if (!g.contains(v)) return fail("vertex " + std::to_string(v) + " out of range");
    for (const auto& e : s.pairs)
        if (!g.contains(e.first) || !g.contains(e.second))
            return fail("pair " + edge_text(e) + " has an id out of range");

    std::vector<char> seen(n, 0);
    for (const auto& e : s.pairs) {
        if (e.first == e.second) return fail("pair " + edge_text(e) + " repeats a vertex");
        for (Vertex x : {e.first, e.second}) {
            if (seen[x]) return fail("vertex " + std::to_string(x) + " appears in two pairs");
            if (!s.vertices.contains(x))
                return fail("pair " + edge_text(e) + " uses vertex " + std::to_string(x) + " outside the set");
            seen[x] = 1;
        }
    }
    for (Vertex v : s.vertices)
        if (!seen[v]) return fail("vertex " + std::to_string(v) + " has no partner");

    for (const auto& e : s.pairs) {
        if (require_edges) {
            if (!g.has_edge(e.first, e.second)) return fail("pair " + edge_text(e) + " is not an edge");
        } else if (!within_distance_two(g, e.first, e.second)) {
            const auto d = bfs_distances(g, e.first)[e.second];
            return fail("pair " + edge_text(e) + " at distance " +
                        (d == kUnreachable ? std::string("infinity") : std::to_string(d)) + " > 2");
        }
    }

    std::vector<char> covered(n, 0);
    for (Vertex v : s.vertices) {
        covered[v] = 1;
        for (Vertex w : g.neighbors(v)) covered[w] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!covered[v]) return fail("vertex " + std::to_string(v) + " is not dominated");
    return {true, {}};
}

// State machine for the sweep over the reverse BFS order of the block tree.
class Sweep {
public:
    Sweep(const Graph& g, const BlockTree& t, Trace* trace)
        : g_(g), t_(t), trace_(trace),
          position_(g.num_vertices()),
          dominated_(g.num_vertices(), 0),
          label_(g.num_vertices(), 0),
          pending_(g.num_vertices(), kNoVertex),
          partner_(g.num_vertices(), kNoVertex) {
        for (std::size_t i = 0; i < t.processing_order.size(); ++i)
            position_[t.processing_order[i]] = static_cast<std::int32_t>(i);
    }

    SemipairedSolution run() {
        const auto& order = t_.processing_order;
        const auto n = static_cast<std::int32_t>(order.size());
        for (std::int32_t i = 0; i < n; ++i) {
            const Vertex v = order[i];
            const bool last = i == n - 1;
            if (trace_) {
                trace_->steps.emplace_back();
                step_ = &trace_->steps.back();
                step_->index = i + 1;
                step_->vertex = v;
            }

            if (!dominated_[v] && !last) select_parent_of(v);
            if (dominated_[v] && pending_[v] != kNoVertex) serve_request_at(v);
            if (last && !dominated_[v]) cover_root(v);

            if (trace_) {
                if (step_->cases.empty()) step_->cases = "-";
                check_invariants(i);
            }
        }

        std::vector<Edge> pairs;
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (label_[v] == 1) throw std::logic_error("vertex " + std::to_string(v) + " left unpaired");
            if (label_[v] == 2 && v < partner_[v]) pairs.emplace_back(v, partner_[v]);
        }
        return SemipairedSolution::from_pairs(g_.num_vertices(), std::move(pairs));
    }

private:
    // v is undominated: take its parent, then either hand it a partner that
    // is waiting nearby or leave a request one level up.
    void select_parent_of(Vertex v) {
        note_case("a");
        const Vertex chosen = t_.parent[v];
        select(chosen);
        dominate_closed(chosen);

        Vertex requester = kNoVertex;
        auto consider = [&](Vertex u) {
            if (pending_[u] != kNoVertex && (requester == kNoVertex || position_[u] < position_[requester]))
                requester = u;
        };
        consider(chosen);
        for (Vertex u : g_.neighbors(chosen)) consider(u);

        if (requester == kNoVertex) {
            set_pending(t_.parent[chosen], chosen);
        } else {
            pair(chosen, pending_[requester]);
            set_pending(requester, kNoVertex);
        }
    }

    void serve_request_at(Vertex v) {
        const Vertex waiting = pending_[v];
        const Vertex up = t_.parent[v];
        Vertex mate = kNoVertex;
        if (label_[up] == 0) {
            note_case("b1");
            mate = up;
        } else if (label_[v] == 0) {
            note_case("b2");
            mate = v;
        } else {
            note_case("b3");
            mate = first_free_neighbor(waiting);
            if (mate == kNoVertex)
                throw std::logic_error("no free neighbor to pair with " + std::to_string(waiting));
        }
        select(mate);
        dominate_closed(mate);
        pair(waiting, mate);
        set_pending(v, kNoVertex);
    }

    void cover_root(Vertex root) {
        note_case("c");
        const Vertex mate = first_free_neighbor(root);
        if (mate == kNoVertex) throw std::logic_error("root has no free neighbor");
        select(root);
        select(mate);
        dominate_closed(root);
        dominate_closed(mate);
        pair(root, mate);
    }

    // Free neighbor with the smallest id.
    Vertex first_free_neighbor(Vertex v) const {
        for (Vertex u : g_.neighbors(v))
            if (label_[u] == 0) return u;
        return kNoVertex;
    }

    void select(Vertex v) {
        label_[v] = 1;
        if (step_) step_->selected.push_back(v);
    }

    void dominate_closed(Vertex v) {
        mark(v);
        for (Vertex w : g_.neighbors(v)) mark(w);
    }

    void mark(Vertex v) {
        if (dominated_[v]) return;
        dominated_[v] = 1;
        if (step_) step_->newly_dominated.push_back(v);
    }

    void pair(Vertex a, Vertex b) {
        label_[a] = label_[b] = 2;
        partner_[a] = b;
        partner_[b] = a;
        if (step_) step_->paired.emplace_back(std::min(a, b), std::max(a, b));
    }

    void set_pending(Vertex at, Vertex value) {
        pending_[at] = value;
        if (step_) step_->pending.emplace_back(at, value);
    }

    void note_case(const char* c) {
        if (!step_) return;
        if (!step_->cases.empty()) step_->cases += '+';
        step_->cases += c;
    }

    void check_invariants(std::int32_t done) const {
        const auto& order = t_.processing_order;
        for (std::int32_t j = 0; j <= done; ++j) {
            const Vertex u = order[j];
            if (!dominated_[u])
                throw std::logic_error("processed vertex " + std::to_string(u) + " is undominated");
            if (pending_[u] != kNoVertex)
                throw std::logic_error("processed vertex " + std::to_string(u) + " still has a request");
        }
        for (Vertex x = 0; x < g_.num_vertices(); ++x) {
            const Vertex k = pending_[x];
            if (k == kNoVertex) continue;
            if (label_[k] != 1)
                throw std::logic_error("request at " + std::to_string(x) + " names non-waiting vertex");
            auto unpaired = [&](Vertex u) { return u != k && label_[u] == 1; };
            bool bad = unpaired(x);
            for (Vertex u : g_.neighbors(x)) bad = bad || unpaired(u);
            if (bad)
                throw std::logic_error("selected-but-unpaired vertex next to request at " + std::to_string(x));
        }
    }

    const Graph& g_;
    const BlockTree& t_;
    Trace* trace_;
    TraceStep* step_ = nullptr;
    std::vector<std::int32_t> position_;
    std::vector<std::uint8_t> dominated_;
    std::vector<std::uint8_t> label_;  // 0 free, 1 selected, 2 selected and paired
    std::vector<Vertex> pending_;
    std::vector<Vertex> partner_;
};

BlockTree prepare(const Graph& g) {
    if (g.num_vertices() < 2) throw PreconditionError("need at least two vertices");
    const auto d = decompose(g);
    if (!is_block_graph(g, d)) throw PreconditionError("graph is not a block graph");
    return build_block_tree(g, compute_beo(g, d));
}

template <class T>
std::string join(const std::vector<T>& items, auto&& fmt) {
    if (items.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += fmt(items[i]);
    }
    return out;
}

}  // namespace

Verdict verify_solution(const Graph& g, const SemipairedSolution& s) { return verify_impl(g, s, false); }

Verdict verify_paired_solution(const Graph& g, const SemipairedSolution& s) { return verify_impl(g, s, true); }

SemipairedSolution solve_block_graph(const Graph& g) {
    if (g.num_vertices() < 2) throw PreconditionError("need at least two vertices");
    const auto r = bfs_relabel(g);
    auto s = Sweep(r.graph, prepare(r.graph), nullptr).run();
    for (auto& [a, b] : s.pairs) {
        a = r.order[a];
        b = r.order[b];
    }
    return SemipairedSolution::from_pairs(g.num_vertices(), std::move(s.pairs));
}

SemipairedSolution solve_block_graph(const Graph& g, const BlockTree& tree) {
    return Sweep(g, tree, nullptr).run();
}

Trace trace_block_graph(const Graph& g) {
    const auto tree = prepare(g);
    Trace trace;
    trace.steps.reserve(static_cast<std::size_t>(g.num_vertices()));
    trace.solution = Sweep(g, tree, &trace).run();
    return trace;
}

std::string format_trace(const Trace& t) {
    auto id = [](Vertex v) { return v == kNoVertex ? std::string("-") : std::to_string(v); };
    std::string out;
    for (const auto& s : t.steps) {
        out += std::to_string(s.index) + ' ' + std::to_string(s.vertex) + ' ' + s.cases;
        out += " sel=" + join(s.selected, id);
        out += " dom=" + join(s.newly_dominated, id);
        out += " pair=" + join(s.paired, [&](const Edge& e) { return id(e.first) + '-' + id(e.second); });
        out += " m=" + join(s.pending, [&](const auto& p) { return id(p.first) + ':' + id(p.second); });
        out += '\n';
    }
    return out;
}

std::string emit_solution(const SemipairedSolution& s) {
    std::string out = std::to_string(s.pairs.size()) + '\n';
    for (const auto& [u, v] : s.pairs) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

SemipairedSolution parse_solution(std::string_view text, Vertex n) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(1, "missing pair count");
    long long k = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> k) || k < 0 || (hs >> extra)) throw ParseError(lineno, "expected pair count");
    }
    std::vector<Edge> pairs;
    for (long long i = 0; i < k; ++i) {
        if (!next_line()) throw ParseError(lineno + 1, "expected " + std::to_string(k) + " pairs");
        std::istringstream ls(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) throw ParseError(lineno, "pair line must be 'u v'");
        for (long long x : {u, v})
            if (x < 0 || x >= n)
                throw ParseError(lineno, "id " + std::to_string(x) + " outside [0," + std::to_string(n) + ")");
        pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line()) throw ParseError(lineno, "trailing content after " + std::to_string(k) + " pairs");
    return SemipairedSolution::from_pairs(n, std::move(pairs));
}

SemipairedSolution read_solution_file(const std::string& path, Vertex n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_solution(buf.str(), n);
}

void write_solution_file(const SemipairedSolution& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << emit_solution(s);
}

}  // namespace spdom
