#include "perturb/graph.hpp"

#include <algorithm>
#include <queue>

namespace perturb {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    std::int64_t m = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m += static_cast<std::int64_t>(nbrs.size());
    }
    g.m_ = m / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::check_invariants() const {
    for (int u = 0; u < n_; ++u) {
        const auto& nbrs = adj_[static_cast<size_t>(u)];
        for (size_t i = 0; i < nbrs.size(); ++i) {
            int v = nbrs[i];
            if (v < 0 || v >= n_ || v == u) return false;
            if (i > 0 && nbrs[i - 1] >= v) return false;  // sorted, no duplicates
            if (!has_edge(v, u)) return false;            // symmetry
        }
    }
    return true;
}

VertexSet::VertexSet(std::vector<int> ids) : members(std::move(ids)) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("VertexSet: duplicate vertex id");
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

std::int64_t ClusterFamily::covered() const {
    std::int64_t total = 0;
    for (const auto& c : clusters) total += c.size();
    return total;
}

bool ClusterFamily::disjoint() const {
    std::vector<char> seen(static_cast<size_t>(host_n), 0);
    for (const auto& c : clusters)
        for (int v : c.members) {
            if (v < 0 || v >= host_n) return false;
            if (seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    return true;
}

void ClusterFamily::validate_against(const Graph& g) const {
    if (host_n != g.vertex_count())
        throw std::invalid_argument("ClusterFamily: host vertex count mismatch");
    if (!disjoint())
        throw std::invalid_argument("ClusterFamily: clusters overlap or ids out of range");
    for (const auto& c : clusters) {
        if (c.empty()) throw std::invalid_argument("ClusterFamily: empty cluster");
        if (!induces_connected(g, c.members))
            throw std::invalid_argument("ClusterFamily: cluster does not induce a connected subgraph");
    }
}

Graph union_graphs(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("union_graphs: vertex count mismatch");
    auto edges = a.edges();
    auto eb = b.edges();
    edges.insert(edges.end(), eb.begin(), eb.end());
    return Graph::from_edges(a.vertex_count(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<size_t>(n), -1);
    std::vector<VertexSet> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(comps.size());
        std::vector<int> members;
        stack.push_back(s);
        label[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int v : g.neighbors(u))
                if (label[static_cast<size_t>(v)] < 0) {
                    label[static_cast<size_t>(v)] = id;
                    stack.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        VertexSet vs;
        vs.members = std::move(members);
        comps.push_back(std::move(vs));
    }
    return comps;
}

Graph spanning_forest(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> tree_edges;
    std::queue<int> queue;
    for (int s = 0; s < n; ++s) {
        if (visited[static_cast<size_t>(s)]) continue;
        visited[static_cast<size_t>(s)] = 1;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : g.neighbors(u))
                if (!visited[static_cast<size_t>(v)]) {
                    visited[static_cast<size_t>(v)] = 1;
                    tree_edges.emplace_back(u, v);
                    queue.push(v);
                }
        }
    }
    return Graph::from_edges(n, tree_edges);
}

Graph contract_family(const Graph& g, const ClusterFamily& fam) {
    fam.validate_against(g);
    return cluster_quotient(g, fam);
}

Graph cluster_quotient(const Graph& g, const ClusterFamily& fam) {
    if (fam.host_n != g.vertex_count())
        throw std::invalid_argument("cluster_quotient: host vertex count mismatch");
    if (!fam.disjoint())
        throw std::invalid_argument("cluster_quotient: clusters overlap or ids out of range");
    const int n = g.vertex_count();
    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (int i = 0; i < fam.size(); ++i)
        for (int v : fam.clusters[static_cast<size_t>(i)].members)
            owner[static_cast<size_t>(v)] = i;

    std::vector<std::pair<int, int>> meta_edges;
    for (int u = 0; u < n; ++u) {
        int cu = owner[static_cast<size_t>(u)];
        if (cu < 0) continue;
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int cv = owner[static_cast<size_t>(v)];
            if (cv < 0 || cv == cu) continue;
            meta_edges.emplace_back(std::min(cu, cv), std::max(cu, cv));
        }
    }
    return Graph::from_edges(fam.size(), meta_edges);
}

bool is_forest(const Graph& g) {
    // Acyclic iff |E| = n - #components.
    std::int64_t comps = static_cast<std::int64_t>(connected_components(g).size());
    return g.edge_count() == g.vertex_count() - comps;
}

bool lift_forest_check(const Graph& g, const ClusterFamily& fam) {
    if (fam.host_n != g.vertex_count())
        throw std::invalid_argument("lift_forest_check: host vertex count mismatch");
    if (!fam.disjoint())
        throw std::invalid_argument("lift_forest_check: clusters overlap");
    if (fam.covered() != g.vertex_count())
        throw LiftPreconditionError(LiftViolation::NonCover,
                                    "lift_forest_check: clusters do not cover all vertices");

    const int n = g.vertex_count();
    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (int i = 0; i < fam.size(); ++i)
        for (int v : fam.clusters[static_cast<size_t>(i)].members)
            owner[static_cast<size_t>(v)] = i;

    // Every cluster must induce a tree.
    for (const auto& c : fam.clusters) {
        std::int64_t internal = 0;
        for (int u : c.members)
            for (int v : g.neighbors(u))
                if (v > u && owner[static_cast<size_t>(v)] == owner[static_cast<size_t>(u)] &&
                    c.contains(v))
                    ++internal;
        if (!induces_connected(g, c.members) || internal != c.size() - 1)
            throw LiftPreconditionError(LiftViolation::NonTreeCluster,
                                        "lift_forest_check: cluster does not induce a tree");
    }

    // At most one edge between any two clusters.
    std::vector<std::pair<int, int>> cross;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int cu = owner[static_cast<size_t>(u)], cv = owner[static_cast<size_t>(v)];
            if (cu != cv) cross.emplace_back(std::min(cu, cv), std::max(cu, cv));
        }
    std::sort(cross.begin(), cross.end());
    if (std::adjacent_find(cross.begin(), cross.end()) != cross.end())
        throw LiftPreconditionError(LiftViolation::MultiEdgePair,
                                    "lift_forest_check: two clusters joined by more than one edge");

    return is_forest(contract_family(g, fam));
}

bool induces_connected(const Graph& g, std::span<const int> sorted_members) {
    if (sorted_members.empty()) return false;
    auto in_set = [&](int v) {
        return std::binary_search(sorted_members.begin(), sorted_members.end(), v);
    };
    std::vector<char> visited(sorted_members.size(), 0);
    auto index_of = [&](int v) {
        return static_cast<size_t>(std::lower_bound(sorted_members.begin(), sorted_members.end(), v) -
                                   sorted_members.begin());
    };
    std::vector<int> stack{sorted_members[0]};
    visited[0] = 1;
    size_t seen = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (!in_set(v)) continue;
            size_t idx = index_of(v);
            if (!visited[idx]) {
                visited[idx] = 1;
                ++seen;
                stack.push_back(v);
            }
        }
    }
    return seen == sorted_members.size();
}

}  // namespace perturb
