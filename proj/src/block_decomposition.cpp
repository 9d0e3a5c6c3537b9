#include "spdom/block_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "spdom/errors.hpp"

namespace spdom {

BlockDecomposition decompose(const Graph& g) {
    const Vertex n = g.num_vertices();
    if (n < 2) throw PreconditionError("decompose needs at least two vertices");

    // Per-vertex DFS state kept together so one cache line serves a visit.
    struct Slot {
        std::int32_t disc = -1;
        std::int32_t low = 0;
        Vertex parent = kNoVertex;
        std::int32_t next = 0;
    };
    std::vector<Slot> st(n);
    std::vector<Vertex> path;
    std::vector<Edge> edge_stack;
    std::vector<std::int32_t> stamp(n, -1);

    BlockDecomposition d;
    std::int32_t clock = 0;

    auto emit_block = [&](Vertex u, Vertex v) {
        const auto block_id = static_cast<std::int32_t>(d.block_edges_.size());
        const auto begin = static_cast<std::int64_t>(d.block_vertices_.size());
        std::int64_t edge_count = 0;
        for (;;) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            ++edge_count;
            for (Vertex x : {e.first, e.second}) {
                if (stamp[x] != block_id) {
                    stamp[x] = block_id;
                    d.block_vertices_.push_back(x);
                }
            }
            if (e.first == u && e.second == v) break;
        }
        std::sort(d.block_vertices_.begin() + begin, d.block_vertices_.end());
        d.block_offsets_.push_back(static_cast<std::int64_t>(d.block_vertices_.size()));
        d.block_edges_.push_back(edge_count);
    };

    st[0].disc = st[0].low = clock++;
    path.push_back(0);
    while (!path.empty()) {
        const Vertex v = path.back();
        Slot& sv = st[v];
        auto nb = g.neighbors(v);
        if (sv.next < static_cast<std::int32_t>(nb.size())) {
            const Vertex w = nb[sv.next++];
            Slot& sw = st[w];
            if (sw.disc < 0) {
                sw.parent = v;
                sw.disc = sw.low = clock++;
                edge_stack.emplace_back(v, w);
                path.push_back(w);
            } else if (w != sv.parent && sw.disc < sv.disc) {
                sv.low = std::min(sv.low, sw.disc);
                edge_stack.emplace_back(v, w);
            }
            continue;
        }
        path.pop_back();
        if (path.empty()) break;
        Slot& su = st[sv.parent];
        su.low = std::min(su.low, sv.low);
        if (sv.low >= su.disc) emit_block(sv.parent, v);
    }
    if (clock != n) throw PreconditionError("graph is not connected");

    const std::size_t blocks = d.block_edges_.size();
    d.membership_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex x : d.block_vertices_) ++d.membership_offsets_[x + 1];
    for (Vertex v = 0; v < n; ++v) d.membership_offsets_[v + 1] += d.membership_offsets_[v];
    d.membership_.resize(d.block_vertices_.size());
    std::vector<std::int64_t> fill(d.membership_offsets_.begin(), d.membership_offsets_.end() - 1);
    for (std::size_t b = 0; b < blocks; ++b)
        for (Vertex x : d.block(b)) d.membership_[fill[x]++] = static_cast<std::int32_t>(b);

    for (Vertex v = 0; v < n; ++v)
        if (d.is_cut_vertex(v)) d.cut_vertices_.push_back(v);
    return d;
}

bool is_block_graph(const Graph& /*g*/, const BlockDecomposition& d) {
    for (std::size_t b = 0; b < d.num_blocks(); ++b) {
        const auto k = static_cast<std::int64_t>(d.block(b).size());
        if (d.block_edge_count(b) != k * (k - 1) / 2) return false;
    }
    return true;
}

bool is_block_graph(const Graph& g) {
    if (g.num_vertices() < 2 || !is_connected(g)) return false;
    return is_block_graph(g, decompose(g));
}

std::vector<Vertex> highest_neighbor_map(const Graph& g, std::span<const Vertex> order) {
    const Vertex n = g.num_vertices();
    std::vector<std::int32_t> rank(n);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<std::int32_t>(i);
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) {
        Vertex best = v;
        for (Vertex w : g.neighbors(v))
            if (rank[w] > rank[best]) best = w;
        parent[v] = best;
    }
    if (!order.empty()) parent[order.back()] = order.back();
    return parent;
}

namespace {

// Min-priority set over keys [0, size): one bit per key plus summary words,
// 64 children per word.
class BitQueue {
public:
    explicit BitQueue(std::size_t size) {
        do {
            size = (size + 63) / 64;
            levels_.emplace_back(size, 0);
        } while (size > 1);
    }

    bool empty() const { return levels_.back()[0] == 0; }

    void insert(std::size_t k) {
        for (auto& words : levels_) {
            const bool fresh = words[k / 64] == 0;
            words[k / 64] |= std::uint64_t{1} << (k % 64);
            if (!fresh) return;
            k /= 64;
        }
    }

    std::size_t pop_min() {
        std::size_t k = 0;
        for (auto level = levels_.rbegin(); level != levels_.rend(); ++level)
            k = k * 64 + static_cast<std::size_t>(std::countr_zero((*level)[k]));
        const std::size_t key = k;
        for (auto& words : levels_) {
            words[k / 64] &= ~(std::uint64_t{1} << (k % 64));
            if (words[k / 64] != 0) break;
            k /= 64;
        }
        return key;
    }

private:
    std::vector<std::vector<std::uint64_t>> levels_;
};

}  // namespace

BlockOrder compute_beo(const Graph& g, const BlockDecomposition& d) {
    if (!is_block_graph(g, d)) throw PreconditionError("graph is not a block graph");

    const Vertex n = g.num_vertices();
    const std::size_t blocks = d.num_blocks();
    BlockOrder out;
    out.order.reserve(n);
    out.parent.assign(n, kNoVertex);

    std::vector<std::int32_t> live_blocks(n);
    for (Vertex v = 0; v < n; ++v) live_blocks[v] = static_cast<std::int32_t>(d.blocks_of(v).size());
    // Per block: live cut vertices, their xor (the cut itself once only one
    // is left), and whether the block is still unpeeled.
    struct Slot {
        std::int32_t live_cuts = 0;
        Vertex cut_xor = 0;
        bool alive = true;
    };
    std::vector<Slot> bs(blocks);

    // End blocks leave in order of (smallest id, second smallest id), which
    // is unique since two blocks share at most one vertex. Two counting
    // sorts give each block its slot in that order.
    std::vector<std::int32_t> by_slot(blocks), slot(blocks);
    {
        std::vector<Vertex> lo(blocks), hi(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            lo[b] = d.block(b)[0];
            hi[b] = d.block(b)[1];
        }
        std::vector<std::int32_t> start(static_cast<std::size_t>(n) + 1), tmp(blocks);
        auto pass = [&](const std::vector<Vertex>& k, const std::vector<std::int32_t>& in, std::vector<std::int32_t>& to) {
            std::fill(start.begin(), start.end(), 0);
            for (std::size_t b = 0; b < blocks; ++b) ++start[k[b] + 1];
            for (Vertex v = 0; v < n; ++v) start[v + 1] += start[v];
            for (std::int32_t b : in) to[start[k[b]]++] = b;
        };
        std::iota(by_slot.begin(), by_slot.end(), 0);
        pass(hi, by_slot, tmp);
        pass(lo, tmp, by_slot);
        for (std::size_t i = 0; i < blocks; ++i) slot[by_slot[i]] = static_cast<std::int32_t>(i);
    }
    BitQueue end_blocks(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        for (Vertex x : d.block(b))
            if (live_blocks[x] >= 2) {
                ++bs[b].live_cuts;
                bs[b].cut_xor ^= x;
            }
        if (bs[b].live_cuts == 1) end_blocks.insert(slot[b]);
    }

    std::size_t remaining = blocks;
    while (remaining > 1) {
        if (end_blocks.empty()) throw std::logic_error("block peeling ran out of end blocks");
        const auto b = static_cast<std::size_t>(by_slot[end_blocks.pop_min()]);

        // Non-cut vertices of an end block see only the block, so the cut is
        // their highest-ranked neighbor.
        const Vertex cut = bs[b].cut_xor;
        for (Vertex x : d.block(b))
            if (x != cut) {
                out.order.push_back(x);
                out.parent[x] = cut;
            }
        bs[b].alive = false;
        --remaining;

        if (--live_blocks[cut] == 1) {
            for (auto other : d.blocks_of(cut)) {
                if (!bs[other].alive) continue;
                bs[other].cut_xor ^= cut;
                if (--bs[other].live_cuts == 1) end_blocks.insert(slot[other]);
                break;
            }
        }
    }
    for (std::size_t b = 0; b < blocks; ++b) {
        if (!bs[b].alive) continue;
        const auto last = d.block(b);
        for (Vertex x : last) {
            out.order.push_back(x);
            out.parent[x] = last.back();
        }
    }

    out.rank.assign(n, 0);
    for (Vertex i = 0; i < n; ++i) out.rank[out.order[i]] = i;
    return out;
}

bool verify_beo(const Graph& g, std::span<const Vertex> order) {
    const Vertex n = g.num_vertices();
    if (static_cast<Vertex>(order.size()) != n) return false;
    std::vector<std::int32_t> rank(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        if (!g.contains(v) || rank[v] >= 0) return false;
        rank[v] = static_cast<std::int32_t>(i);
    }
    std::vector<Vertex> later;
    for (Vertex v = 0; v < n; ++v) {
        later.clear();
        for (Vertex w : g.neighbors(v))
            if (rank[w] > rank[v]) later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

BlockTree build_block_tree(const Graph& g, const BlockOrder& o) {
    const Vertex n = g.num_vertices();
    if (static_cast<Vertex>(o.order.size()) != n || static_cast<Vertex>(o.parent.size()) != n ||
        static_cast<Vertex>(o.rank.size()) != n || n == 0)
        throw PreconditionError("block order does not match the graph");

    BlockTree t;
    t.root = o.order.back();
    t.parent = o.parent;
    if (t.parent[t.root] != t.root) throw PreconditionError("root must be its own parent");
    for (Vertex v = 0; v < n; ++v) {
        if (v == t.root) continue;
        const Vertex p = t.parent[v];
        if (!g.has_edge(v, p) || o.rank[p] <= o.rank[v])
            throw PreconditionError("parent of " + std::to_string(v) + " is not a higher-ranked neighbor");
    }

    t.child_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        if (v != t.root) ++t.child_offsets[t.parent[v] + 1];
    for (Vertex v = 0; v < n; ++v) t.child_offsets[v + 1] += t.child_offsets[v];
    t.children.resize(static_cast<std::size_t>(n) - 1);
    std::vector<std::int64_t> fill(t.child_offsets.begin(), t.child_offsets.end() - 1);
    for (Vertex v = 0; v < n; ++v)
        if (v != t.root) t.children[fill[t.parent[v]]++] = v;

    t.level.assign(n, 0);
    std::vector<Vertex> bfs;
    bfs.reserve(n);
    bfs.push_back(t.root);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        const Vertex u = bfs[head];
        for (Vertex c : t.children_of(u)) {
            t.level[c] = t.level[u] + 1;
            bfs.push_back(c);
        }
    }
    if (static_cast<Vertex>(bfs.size()) != n) throw PreconditionError("parent map is not a spanning tree");
    t.processing_order.assign(bfs.rbegin(), bfs.rend());
    return t;
}

std::string format_block_tree(const BlockTree& t) {
    std::string out;
    for (std::size_t v = 0; v < t.parent.size(); ++v) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(t.parent[v]);
        out += ' ';
        out += std::to_string(t.level[v]);
        out += '\n';
    }
    return out;
}

}  // namespace spdom
