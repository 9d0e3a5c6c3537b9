#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spdom/graph.hpp"
#include "spdom/semipaired.hpp"

namespace spdom {

enum class GadgetKind { gp4, gp5, split, apx4, degsplit };

std::string gadget_name(GadgetKind k);

/// A named vertex of a gadget, e.g. {"w", 3, 17} for w_3 at id 17.
struct Role {
    std::string name;
    std::int32_t index = 0;
    Vertex vertex = kNoVertex;
};

struct GadgetGraph {
    Graph graph;
    GadgetKind tag = GadgetKind::gp4;
    Vertex origin_n = 0;
    std::vector<Role> roles;
    /// Source vertex each gadget vertex was built for; kNoVertex for
    /// vertices that stand for a source edge.
    std::vector<Vertex> origin;

    /// Throws std::out_of_range if the role is absent.
    Vertex role(std::string_view name, std::int32_t index) const;
};

/// Role-map sidecar: one line `role index vertex_id` per role.
std::string emit_role_map(const GadgetGraph& gg);

/// Pendant path v_i-w_i-x_i-y_i-z_i at every vertex.
/// Layout: v_i = i, then w,x,y,z of vertex i at n + 4i + {0,1,2,3}.
GadgetGraph gp4(const Graph& h);

/// Path a_i-b_i-c_i-d_i-e_i joined at its center c_i to v_i.
/// Layout: v_i = i, a..e of vertex i at n + 5i + {0..4}.
GadgetGraph gp5(const Graph& h);

/// Split graph with clique V1 u U1 and independent set V2 u U2;
/// v2_i ~ v1_j and u2_i ~ u1_j for every j in N[i].
/// Layout: v1_i = i, u1_i = n + i, v2_i = 2n + i, u2_i = 3n + i.
GadgetGraph split_reduction(const Graph& g);

/// Two copies of the vertex-edge incidence graph, the i-th vertex copies
/// tied together through w_i, which carries the path w_i-x_i-y_i-z_i.
/// Layout: v1_i = i, v2_i = n + i, e1_j = 2n + j, e2_j = 2n + m + j (edges
/// in canonical order), w,x,y,z of vertex i at 2n + 2m + 4i + {0..3}.
GadgetGraph apx_reduction(const Graph& g);

/// Replaces each degree-4 vertex v by the path v1-...-v6 plus v7 adjacent
/// to v3 and v4. The two lowest-id neighbors of v attach to v1, the other
/// two to v6. v keeps its id as v1; v2..v7 of the t-th degree-4 vertex
/// (ascending id) sit at n + 6t + {0..5}.
GadgetGraph degree_split(const Graph& g);

/// Gadget vertex that carries the edge {a, b} at a's end.
Vertex degree_split_port(const Graph& g, const GadgetGraph& gg, Vertex a, Vertex b);

/// Pairs {w_i, y_i} for every i.
SemipairedSolution gp4_witness(const GadgetGraph& gg);
/// Pairs {a_i, b_i} and {c_i, d_i} for every i (all pairs are edges).
SemipairedSolution gp5_witness(const GadgetGraph& gg);
/// s plus the pairs {x_i, y_i}; paired if s is paired.
SemipairedSolution gp4_extend(const GadgetGraph& gg, const SemipairedSolution& s);
/// s plus the pairs {b_i, d_i}.
SemipairedSolution gp5_extend(const GadgetGraph& gg, const SemipairedSolution& s);
/// Pairs {v1_i, u1_i} for a dominating set of the source.
SemipairedSolution semipd_from_dominating(const GadgetGraph& gg, const VertexSet& dom);
/// Pairs {v1_i, v2_i} for i in the cover plus {w_i, y_i} for every i.
SemipairedSolution semipd_from_vertex_cover(const Graph& g, const GadgetGraph& gg, const VertexSet& vc);

/// Dominating set of the source of size <= |s|/2.
VertexSet dominating_from_semipd(const GadgetGraph& gg, const SemipairedSolution& s);
/// Vertex cover of the source of size <= (|s| - 2n)/2.
VertexSet vertex_cover_from_semipd(const Graph& g, const GadgetGraph& gg, const SemipairedSolution& s);

/// Raised when a pair of the source solution runs through a degree-4 vertex
/// between its two gadget ends, so no case assignment keeps it within
/// distance 2.
class LiftError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solution of the degree-split graph of size |s| + 2k, built per degree-4
/// vertex from its case (in s and partner side, or dominator side). Falls
/// back to other case choices and a fresh pairing before giving up with
/// LiftError.
SemipairedSolution lift_semipd_degree_split(const Graph& g, const GadgetGraph& gg, const SemipairedSolution& s);
/// Solution of g of size <= |s| - 2k.
SemipairedSolution project_semipd_degree_split(const Graph& g, const GadgetGraph& gg, const SemipairedSolution& s);

/// Clique + independent set partition exists (degree-sequence test).
bool is_split_graph(const Graph& g);
bool is_bipartite(const Graph& g);

/// Connected block graph on exactly n_target vertices, grown by gluing
/// cliques of 2..max_clique vertices at random existing vertices, then
/// randomly relabeled.
Graph random_block_graph(std::uint64_t seed, Vertex n_target, std::int32_t max_clique);

/// Connected graph on n vertices with maximum degree <= max_deg: a random
/// spanning tree under the cap plus random extra edges.
Graph random_bounded_degree_graph(std::uint64_t seed, Vertex n, std::int32_t max_deg);

}  // namespace spdom
