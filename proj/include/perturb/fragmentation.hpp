#pragma once

#include "perturb/graph.hpp"

namespace perturb {

/// Decomposes a connected graph into vertex-disjoint connected clusters whose
/// sizes lie in [ell, ell * max_degree), leaving fewer than ell vertices
/// uncovered. Works on a BFS spanning tree rooted at vertex 0: repeatedly emit
/// the residual subtree of the deepest vertex (ties broken by smallest id)
/// whose residual size is at least ell.
///
/// For max_degree <= 1 (K_1, K_2) the size window degenerates; clusters of any
/// size >= ell are emitted. ell > |V| yields an empty family.
ClusterFamily fragment(const Graph& g, int ell);

}  // namespace perturb
