#pragma once

// Plain subset enumeration with no pruning, kept apart from the library's
// exact solvers so the two can check each other. Only for n <= ~12.

#include <cstdint>
#include <vector>

#include "spdom/graph.hpp"

namespace naive {

using spdom::Graph;
using spdom::Vertex;

inline std::vector<std::vector<int>> distances(const Graph& g) {
    const Vertex n = g.num_vertices();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> q{s};
        d[s][s] = 0;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (Vertex w : g.neighbors(q[h]))
                if (d[s][w] < 0) {
                    d[s][w] = d[s][q[h]] + 1;
                    q.push_back(w);
                }
    }
    return d;
}

inline bool dominating(const Graph& g, std::uint32_t set) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        bool hit = set >> v & 1;
        for (Vertex w : g.neighbors(v)) hit = hit || (set >> w & 1);
        if (!hit) return false;
    }
    return true;
}

// Can the members of `set` be split into pairs with distance in [1, max_d]?
inline bool pairable(const std::vector<std::vector<int>>& d, std::uint32_t set, int max_d) {
    if (set == 0) return true;
    int i = 0;
    while (!(set >> i & 1)) ++i;
    const std::uint32_t rest = set & ~(1u << i);
    for (int j = i + 1; j < 32; ++j)
        if ((rest >> j & 1) && d[i][j] >= 1 && d[i][j] <= max_d && pairable(d, rest & ~(1u << j), max_d)) return true;
    return false;
}

inline bool covers(const Graph& g, std::uint32_t set) {
    for (const auto& [u, v] : g.edges())
        if (!(set >> u & 1) && !(set >> v & 1)) return false;
    return true;
}

// kind: 0 domination, 1 paired (distance 1), 2 semipaired (distance <= 2), 3 vertex cover.
inline int optimum(const Graph& g, int kind) {
    const Vertex n = g.num_vertices();
    const auto d = distances(g);
    int best = -1;
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        const int size = __builtin_popcount(set);
        if (best >= 0 && size >= best) continue;
        bool ok;
        if (kind == 3) {
            ok = covers(g, set);
        } else {
            ok = dominating(g, set);
            if (ok && kind > 0) ok = size % 2 == 0 && pairable(d, set, kind == 1 ? 1 : 2);
        }
        if (ok) best = size;
    }
    return best;
}

inline int gamma(const Graph& g) { return optimum(g, 0); }
inline int gamma_pr(const Graph& g) { return optimum(g, 1); }
inline int gamma_pr2(const Graph& g) { return optimum(g, 2); }
inline int tau(const Graph& g) { return optimum(g, 3); }

}  // namespace naive
