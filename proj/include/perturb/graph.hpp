#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace perturb {

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Immutable after construction; adjacency lists are sorted and duplicate-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    // Builds a graph from an edge list. Duplicate edges are collapsed silently;
    // self-loops and out-of-range ids are rejected.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges));
    }

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    bool has_edge(int u, int v) const;
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<size_t>(v)].size());
    }
    int max_degree() const;

    /// Dumps the edge set as sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    // Structural invariant check (symmetry, sortedness, no loops/duplicates,
    // ids in range). Cheap enough to run inside tests and validators.
    bool check_invariants() const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex id out of range");
    }

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Sorted duplicate-free set of vertex ids.
struct VertexSet {
    std::vector<int> members;

    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }
    bool contains(int v) const;
    int min_id() const { return members.empty() ? -1 : members.front(); }

    bool operator==(const VertexSet& other) const { return members == other.members; }
};

/// Ordered collection of vertex sets, intended to be pairwise disjoint and
/// connected in a reference graph (checked by validate_against).
struct ClusterFamily {
    std::vector<VertexSet> clusters;
    int host_n = 0;

    int size() const { return static_cast<int>(clusters.size()); }
    std::int64_t covered() const;

    bool disjoint() const;
    // Throws std::invalid_argument when ids are out of range, clusters overlap,
    // or some cluster does not induce a connected subgraph of g.
    void validate_against(const Graph& g) const;
};

enum class LiftViolation { NonTreeCluster, MultiEdgePair, NonCover };

class LiftPreconditionError : public std::runtime_error {
public:
    LiftPreconditionError(LiftViolation kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    LiftViolation kind() const { return kind_; }

private:
    LiftViolation kind_;
};

// ---- structural operations ----

/// Edge-set union of two graphs on the same vertex set.
Graph union_graphs(const Graph& a, const Graph& b);

/// Partition of [0, n) into connected components (each sorted; ordered by min id).
std::vector<VertexSet> connected_components(const Graph& g);

/// BFS forest: acyclic subgraph with the same components, n - #components edges.
Graph spanning_forest(const Graph& g);

/// Contracts every cluster to a single vertex; vertices not covered by any
/// cluster are deleted. Result vertex i corresponds to clusters[i]; i and j are
/// adjacent iff g has at least one edge between the two clusters.
Graph contract_family(const Graph& g, const ClusterFamily& fam);

/// Adjacency between clusters, like contract_family, but without requiring
/// clusters to be connected in g (only disjointness and id range are checked).
/// Used to restrict a contraction to a chosen edge source.
Graph cluster_quotient(const Graph& g, const ClusterFamily& fam);

bool is_forest(const Graph& g);

/// Checks acyclicity of g through the contraction of fam. Requires every
/// cluster to induce a tree, at most one edge between any two clusters, and
/// fam to cover V(g); under those preconditions the result equals is_forest(g).
bool lift_forest_check(const Graph& g, const ClusterFamily& fam);

// True iff the (sorted) vertex set induces a connected subgraph of g.
// The empty set counts as not connected.
bool induces_connected(const Graph& g, std::span<const int> sorted_members);

}  // namespace perturb
