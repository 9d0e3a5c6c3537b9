#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spdom {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Marks "no vertex" in per-vertex id arrays.
inline constexpr Vertex kNoVertex = -1;

/// Distance value reported by bfs_distances for vertices not reachable from the source.
inline constexpr std::int32_t kUnreachable = -1;

struct Relabeled;

/// Simple undirected graph in compressed adjacency form.
///
/// Immutable once built. Neighbor lists are strictly ascending, symmetric, and
/// free of self-loops, so two graphs compare equal iff they have the same
/// vertex count and edge set.
class Graph {
public:
    Graph() = default;

    /// Builds the canonical graph on `n` vertices. Repeated pairs (in either
    /// orientation) collapse to one edge. Throws GraphError naming the
    /// offending pair on an out-of-range id or a self-loop.
    static Graph from_edges(Vertex n, std::span<const Edge> edges);
    static Graph from_edges(Vertex n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    Vertex num_vertices() const noexcept { return n_; }
    std::int64_t num_edges() const noexcept { return static_cast<std::int64_t>(targets_.size()) / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]); }
    std::int32_t max_degree() const noexcept;

    bool has_edge(Vertex u, Vertex v) const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

    friend bool operator==(const Graph&, const Graph&) = default;
    friend Relabeled bfs_relabel(const Graph& g);

private:
    Vertex n_ = 0;
    std::vector<std::int64_t> offsets_{0};
    std::vector<Vertex> targets_;
};

/// Sorted set of vertex ids of a particular graph.
class VertexSet {
public:
    VertexSet() = default;
    /// Throws GraphError if a member is outside [0, n). Duplicates collapse.
    VertexSet(Vertex n, std::vector<Vertex> members);

    Vertex universe() const noexcept { return n_; }
    std::span<const Vertex> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    Vertex n_ = 0;
    std::vector<Vertex> members_;
};

bool is_connected(const Graph& g);

/// Copy of a graph renumbered in BFS order from vertex 0; unreached vertices
/// start new searches in ascending id. `order[new_id]` is the old id.
struct Relabeled {
    Graph graph;
    std::vector<Vertex> order;
};
Relabeled bfs_relabel(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// N[v]. Throws GraphError for an out-of-range id.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Hop distances from `src`; kUnreachable where no path exists.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex src);

/// d(u, v) <= 2 with u != v.
bool within_distance_two(const Graph& g, Vertex u, Vertex v);

/// True iff every vertex lies in N[set].
bool dominates(const Graph& g, std::span<const Vertex> set);

/// Edge-list text: header `n m`, then m lines `u v`. Errors carry the line number.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace spdom
