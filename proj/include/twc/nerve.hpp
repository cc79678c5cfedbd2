#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "twc/group.hpp"

namespace twc {

using Edge = std::array<int, 2>;
using Tri = std::array<int, 3>;
using Tet = std::array<int, 4>;

// Finite simplicial complex through dimension 3. Simplices are sorted tuples,
// each list sorted lexicographically.
struct Nerve {
  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<Tri> tris;
  std::vector<Tet> tets;

  int edge_index(int i, int j) const;  // -1 if absent; order of i, j irrelevant
  int tri_index(Tri t) const;
  int tet_index(Tet t) const;
  std::vector<int> neighbours(int v) const;  // ascending

  // Filled in by the constructors.
  std::vector<int> edge_lookup;  // vertices*vertices, -1 where no edge
  std::map<Tri, int> tri_lookup;
  std::map<Tet, int> tet_lookup;
  std::vector<int> component;  // per vertex, numbered by minimal vertex
  int component_count = 0;
};

// Takes maximal simplices (any dimension) and adds all faces up to dimension 3.
Nerve nerve_from_maximal(int vertices, const std::vector<std::vector<int>>& simplices);
// Takes a full simplex list; throws NotClosed(simplex) if a face is missing.
Nerve validate_nerve(int vertices, const std::vector<std::vector<int>>& simplices);
std::vector<std::vector<int>> maximal_simplices(const Nerve& n);

// BFS spanning forest in label order. parent_edge[v] = -1 for roots.
struct Forest {
  std::vector<int> parent;
  std::vector<int> parent_edge;
  std::vector<int> order;  // BFS visiting order, roots first within each component
  std::vector<int> roots;  // minimal vertex of each component
  std::vector<char> is_tree_edge;
};
Forest spanning_forest(const Nerve& n);

// Right action v·γ = act[γ][v] on vertices.
struct GammaNerve {
  Nerve nerve;
  GroupPtr gamma;
  Table act;
  bool free = false;

  // Induced action on sorted simplices. edge_flip records whether the
  // image of (i<j) comes out as (j'>i').
  Table edge_img, edge_flip, tri_img, tet_img;
  // Permutation sign of the re-sort for triangles and tetrahedra.
  Table tri_sign, tet_sign;

  int v(int vertex, int gm) const { return act[gm][vertex]; }
};

// Throws InvalidAction, NotAnAction(γ,γ'), NotSimplicial(γ, dim, index), NotFree(γ, dim, index).
GammaNerve validate_gamma_nerve(const Nerve& n, const GroupPtr& gamma, const Table& act, bool require_free = false);
bool action_is_free(const GammaNerve& x);
GammaNerve trivial_gamma_nerve(const Nerve& n);

// Edge-path group presentation of the component of `base`.
struct Pi1Presentation {
  int base = 0;
  std::vector<int> tree_edges;
  std::vector<int> generators;  // non-tree edge indices, oriented low -> high
  std::vector<std::vector<int>> relations;  // letters ±(k+1) for generator k
  std::vector<std::vector<int>> loop_of;    // vertex path base -> ... -> base per generator
};
Pi1Presentation pi1(const Nerve& n, int base = 0);
std::vector<int> reduce_word(const std::vector<int>& word);

// Plain Γ-valued 1-cocycle on Y: x[e] for sorted edge (i<j) is x_ij; x_ji = x_ij^-1.
struct GammaCocycleY {
  GroupPtr gamma;
  std::vector<int> x;
  int at(const Nerve& y, int i, int j) const;
};

struct CoverDescent {
  GammaNerve up;
  Nerve down;
  std::vector<int> section;  // Y vertex -> X vertex
  std::vector<int> orbit;    // X vertex -> Y vertex
  std::vector<int> lift_offset;  // X vertex v = section[orbit[v]]·lift_offset[v]
  GammaCocycleY transitions;     // γ_ij with {s_i·γ_ij, s_j} an X-edge

  int gamma_ij(int i, int j) const { return transitions.at(down, i, j); }
};

// Throws NotFree, NotACover, SectionInvalid.
CoverDescent quotient(const GammaNerve& x, const std::vector<int>& section = {});

// X = Y×Γ with vertex (i,α) at i·|Γ|+α, (i,α)·γ = (i,αγ) and edges {(i,γ_ij β),(j,β)}.
// Throws CocycleViolation when x fails the cocycle law on a triangle.
CoverDescent build_cover(const Nerve& y, const GammaCocycleY& x);

struct MonodromyRep {
  std::vector<int> values;     // holonomy per pi1 generator
  std::vector<int> canonical;  // lexicographically minimal simultaneous conjugate
  Subgroup image;              // Γ'
};
// Throws Disconnected.
MonodromyRep monodromy(const Nerve& y, const GammaCocycleY& x, int base = 0);
MonodromyRep monodromy(const CoverDescent& d);
// Γ-cocycle with tree edges 1 and generator edges set to the given values.
// Throws RelationViolation if a pi1 relation is not respected.
GammaCocycleY cocycle_from_monodromy(const Nerve& y, const GroupPtr& gamma, const std::vector<int>& values, int base = 0);

// Equivariant simplicial isomorphism X1 -> X2 (vertex map), or nullopt.
// With colours, vertex v may only map to vertices of the same colour.
std::optional<std::vector<int>> find_equivariant_iso(const GammaNerve& a, const GammaNerve& b,
                                                     long long max_steps = 5'000'000,
                                                     const std::vector<int>& colour_a = {},
                                                     const std::vector<int>& colour_b = {});

}  // namespace twc
