#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spdom/graph.hpp"

namespace spdom {

/// Blocks (maximal 2-connected pieces; a bridge is a 2-vertex block) and cut
/// vertices of a connected graph.
class BlockDecomposition {
public:
    std::size_t num_blocks() const noexcept { return block_offsets_.size() - 1; }

    /// Vertices of block `b`, ascending.
    std::span<const Vertex> block(std::size_t b) const {
        return {block_vertices_.data() + block_offsets_[b], block_vertices_.data() + block_offsets_[b + 1]};
    }
    std::int64_t block_edge_count(std::size_t b) const { return block_edges_[b]; }

    /// Indices of the blocks containing `v`, ascending.
    std::span<const std::int32_t> blocks_of(Vertex v) const {
        return {membership_.data() + membership_offsets_[v], membership_.data() + membership_offsets_[v + 1]};
    }

    bool is_cut_vertex(Vertex v) const { return blocks_of(v).size() >= 2; }
    const std::vector<Vertex>& cut_vertices() const noexcept { return cut_vertices_; }

private:
    friend BlockDecomposition decompose(const Graph& g);

    std::vector<std::int64_t> block_offsets_{0};
    std::vector<Vertex> block_vertices_;
    std::vector<std::int64_t> block_edges_;
    std::vector<std::int64_t> membership_offsets_;
    std::vector<std::int32_t> membership_;
    std::vector<Vertex> cut_vertices_;
};

/// Iterative lowpoint DFS. Requires a connected graph with n >= 2
/// (PreconditionError otherwise).
BlockDecomposition decompose(const Graph& g);

/// Every block induces a clique.
bool is_block_graph(const Graph& g, const BlockDecomposition& d);
bool is_block_graph(const Graph& g);

/// A block-elimination ordering and its parent map.
///
/// `order[i]` is the vertex at rank i. `parent[v]` is the neighbor of v with
/// the highest rank; the last vertex maps to itself.
struct BlockOrder {
    std::vector<Vertex> order;
    std::vector<std::int32_t> rank;
    std::vector<Vertex> parent;
};

/// Peels end blocks one at a time: each step picks the end block whose
/// smallest vertex id is smallest (then second smallest), numbers its
/// non-cut vertices in ascending id, and removes them. The final clique is
/// numbered ascending. Linear time: blocks are counting-sorted once and
/// end blocks wait in a bitset queue.
/// Throws PreconditionError if `g` is not a block graph.
BlockOrder compute_beo(const Graph& g, const BlockDecomposition& d);

/// Highest-rank neighbor map for an arbitrary ordering (last vertex maps to itself).
std::vector<Vertex> highest_neighbor_map(const Graph& g, std::span<const Vertex> order);

/// True iff `order` is a permutation of [0, n) and, for every vertex, its
/// higher-ranked neighbors are pairwise adjacent. Quadratic in degree; meant
/// for checking, not for production paths.
bool verify_beo(const Graph& g, std::span<const Vertex> order);

/// Rooted tree on V(G) with edges {v, parent(v)}.
struct BlockTree {
    Vertex root = kNoVertex;
    std::vector<Vertex> parent;               // parent[root] == root
    std::vector<std::int32_t> level;          // depth below root
    std::vector<std::int64_t> child_offsets;  // children of v: children[child_offsets[v] .. child_offsets[v+1])
    std::vector<Vertex> children;             // ascending id within each vertex
    std::vector<Vertex> processing_order;     // reverse of the BFS order from root

    std::span<const Vertex> children_of(Vertex v) const {
        return {children.data() + child_offsets[v], children.data() + child_offsets[v + 1]};
    }
};

/// Throws PreconditionError if the parent map does not follow edges of `g`
/// or does not form a tree rooted at the last vertex of `o`.
BlockTree build_block_tree(const Graph& g, const BlockOrder& o);

/// Lines `v parent level`, one per vertex in ascending v.
std::string format_block_tree(const BlockTree& t);

}  // namespace spdom
