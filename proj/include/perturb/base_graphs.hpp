#pragma once

#include <cstdint>
#include <string>

#include "perturb/graph.hpp"

namespace perturb {

/// P_n on ids 0..n-1 in order.
Graph gen_path(int n);

/// Star K_{1,n-1} with centre 0.
Graph gen_star(int n);

/// Random tree with maximum degree <= max_degree: vertex i attaches to a
/// uniformly random earlier vertex that still has residual degree capacity.
Graph gen_bounded_degree_tree(int n, int max_degree, std::uint64_t seed);

struct Caterpillar {
    Graph graph;
    VertexSet spine;   // path on ceil(n/delta) vertices
    VertexSet leaves;  // the remaining n - |spine| vertices, all of degree 1
};

/// Path with leaves attached as evenly as possible so |V| = n exactly.
/// Maximum degree is at most delta + 1. Requires n >= delta >= 3.
Caterpillar gen_caterpillar(int n, int delta);

struct StarOfStars {
    Graph graph;
    int root = 0;
    ClusterFamily stars;  // one cluster per star B_i (centre first)
    VertexSet leaves;     // degree-<=1 vertices of the tree, root excluded
    int t = 0;            // number of stars
    int x = 0;            // star size cap
};

/// Depth-2 rooted tree: root adjacent to t star centres, each star holding at
/// most x vertices, 1 + sum |B_i| = n. The integers t and x are derived from
/// (n, p, c): t maximal in [c n^2 p / 2, c n^2 p] subject to feasibility and
/// x maximal in [2/(cnp), 3/(cnp)]; explicit overrides skip the derivation.
StarOfStars gen_star_of_stars(int n, double p, double c, int t_override = 0,
                              int x_override = 0);

struct PathWithTrees {
    Graph graph;
    VertexSet path_vertices;  // the spine path P
    ClusterFamily trees;      // pendant trees B_1..B_t (components of H - V(P))
    int t = 0;
    int x = 0;
};

/// Path on ceil(t/delta) vertices with t pendant trees of at most x vertices
/// each (max degree <= 3, hooked through a leaf), at most delta - 2 trees per
/// path vertex, total maximum degree <= delta. t and x derived as in
/// gen_star_of_stars unless overridden.
PathWithTrees gen_path_with_trees(int n, int delta, double p, double c,
                                  int t_override = 0, int x_override = 0);

/// Disjoint union of k_paths paths of near-equal length covering n vertices.
Graph gen_path_bundle(int n, int k_paths);

/// Bounded-degree-3 tree on `size` vertices in heap layout starting at id
/// `base`; appends its edges. The last vertex (base + size - 1) is a leaf
/// whenever size >= 2.
void append_binary_tree_edges(std::vector<std::pair<int, int>>& edges, int base, int size);

enum class Family {
    Path,
    Star,
    BoundedDegreeRandomTree,
    CaterpillarPath,
    StarOfStars,
    PathWithTrees,
    PathBundle,
};

Family parse_family(const std::string& tag);
std::string family_tag(Family f);

}  // namespace perturb
