#include "spdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "spdom/errors.hpp"

namespace spdom {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));

    std::vector<std::int64_t> degree(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge " + pair_text(u, v) + " has an id outside [0," + std::to_string(n) + ")");
        if (u == v) throw GraphError("edge " + pair_text(u, v) + " is a self-loop");
        ++degree[u];
        ++degree[v];
    }

    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.targets_.resize(static_cast<std::size_t>(g.offsets_[n]));

    std::vector<std::int64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }

    // Sort and dedupe each list, then compact.
    std::int64_t write = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto first = g.targets_.begin() + g.offsets_[v];
        auto last = g.targets_.begin() + g.offsets_[v + 1];
        std::sort(first, last);
        last = std::unique(first, last);
        const std::int64_t begin = write;
        for (auto it = first; it != last; ++it) g.targets_[write++] = *it;
        g.offsets_[v] = begin;
    }
    g.offsets_[n] = write;
    g.targets_.resize(static_cast<std::size_t>(write));
    g.targets_.shrink_to_fit();
    return g;
}

std::int32_t Graph::max_degree() const noexcept {
    std::int32_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(num_edges()));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(Vertex n, std::vector<Vertex> members) : n_(n), members_(std::move(members)) {
    for (Vertex v : members_)
        if (v < 0 || v >= n_)
            throw GraphError("vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Relabeled bfs_relabel(const Graph& g) {
    const Vertex n = g.n_;
    Relabeled r;
    r.order.reserve(n);
    Graph& h = r.graph;
    h.n_ = n;
    h.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    h.targets_.resize(g.targets_.size());
    std::vector<Vertex> fresh(n, kNoVertex);
    Vertex next_root = 0;
    std::int64_t fill = 0;
    // Rows are written as vertices leave the queue, so one pass suffices.
    for (Vertex u = 0; u < n; ++u) {
        if (u == static_cast<Vertex>(r.order.size())) {
            while (fresh[next_root] != kNoVertex) ++next_root;
            fresh[next_root] = u;
            r.order.push_back(next_root);
        }
        const auto begin = fill;
        for (Vertex w : g.neighbors(r.order[u])) {
            if (fresh[w] == kNoVertex) {
                fresh[w] = static_cast<Vertex>(r.order.size());
                r.order.push_back(w);
            }
            h.targets_[fill++] = fresh[w];
        }
        std::sort(h.targets_.begin() + begin, h.targets_.begin() + fill);
        h.offsets_[u + 1] = fill;
    }
    return r;
}

bool is_connected(const Graph& g) {
    const Vertex n = g.num_vertices();
    if (n == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    auto nb = g.neighbors(v);
    std::vector<Vertex> members(nb.begin(), nb.end());
    members.push_back(v);
    return VertexSet(g.num_vertices(), std::move(members));
}

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex src) {
    if (!g.contains(src)) throw GraphError("vertex " + std::to_string(src) + " out of range");
    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(dist.size());
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

bool within_distance_two(const Graph& g, Vertex u, Vertex v) {
    if (u == v || !g.contains(u) || !g.contains(v)) return false;
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    if (std::binary_search(a.begin(), a.end(), v)) return true;
    // common neighbor
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

bool dominates(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> covered(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : set) {
        if (!g.contains(v)) return false;
        covered[v] = 1;
        for (Vertex w : g.neighbors(v)) covered[w] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

// Splits on ASCII spaces/tabs; a trailing '\r' is tolerated.
std::vector<std::string_view> fields(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t to_int(std::string_view tok, std::size_t line, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos < text.size();) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    // Ignore trailing blank lines.
    while (!lines.empty() && fields(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, "missing header 'n m'");

    auto header = fields(lines[0]);
    if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
    const std::int64_t n = to_int(header[0], 1, "vertex count");
    const std::int64_t m = to_int(header[1], 1, "edge count");
    if (n < 0 || n > INT32_MAX) throw ParseError(1, "vertex count out of range");
    if (m < 0) throw ParseError(1, "negative edge count");

    const auto edge_lines = static_cast<std::int64_t>(lines.size()) - 1;
    if (edge_lines != m)
        throw ParseError(lines.size(), "header declares " + std::to_string(m) + " edges, found " +
                                           std::to_string(edge_lines));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        auto tok = fields(lines[i]);
        if (tok.size() != 2) throw ParseError(lineno, "edge line must be 'u v'");
        const std::int64_t u = to_int(tok[0], lineno, "endpoint");
        const std::int64_t v = to_int(tok[1], lineno, "endpoint");
        for (std::int64_t x : {u, v})
            if (x < 0 || x >= n)
                throw ParseError(lineno, "id " + std::to_string(x) + " >= n=" + std::to_string(n));
        if (u == v) throw ParseError(lineno, "self-loop on " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(static_cast<Vertex>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
    std::string out;
    out.reserve(static_cast<std::size_t>(g.num_edges()) * 12 + 16);
    out += std::to_string(g.num_vertices());
    out += ' ';
    out += std::to_string(g.num_edges());
    out += '\n';
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << emit_edge_list(g);
}

}  // namespace spdom
