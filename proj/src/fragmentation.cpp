#include "perturb/fragmentation.hpp"

#include <algorithm>
#include <queue>

namespace perturb {

ClusterFamily fragment(const Graph& g, int ell) {
    if (ell < 1) throw std::invalid_argument("fragment: ell >= 1 required");
    const int n = g.vertex_count();
    ClusterFamily fam;
    fam.host_n = n;
    if (n == 0) return fam;

    // BFS tree from vertex 0; sorted adjacency makes it deterministic.
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    {
        std::queue<int> queue;
        queue.push(0);
        depth[0] = 0;
        int visited = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : g.neighbors(u))
                if (depth[static_cast<size_t>(v)] < 0) {
                    depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(v)] = u;
                    children[static_cast<size_t>(u)].push_back(v);
                    queue.push(v);
                    ++visited;
                }
        }
        if (visited != n) throw std::invalid_argument("fragment: graph must be connected");
    }

    // Bottom-up sweep in (depth desc, id asc) order. Emitting the residual
    // subtree of the deepest qualifying vertex first is equivalent to the
    // repeated deepest-vertex extraction: subtrees at equal depth are disjoint
    // and ancestors are only visited after all deeper vertices.
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (depth[static_cast<size_t>(a)] != depth[static_cast<size_t>(b)])
            return depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)];
        return a < b;
    });

    std::vector<std::int64_t> size(static_cast<size_t>(n), 1);
    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    for (int v : order) {
        for (int c : children[static_cast<size_t>(v)])
            if (!removed[static_cast<size_t>(c)]) size[static_cast<size_t>(v)] += size[static_cast<size_t>(c)];
        if (size[static_cast<size_t>(v)] < ell) continue;

        // Collect the residual subtree of v.
        std::vector<int> members;
        stack.push_back(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            removed[static_cast<size_t>(u)] = 1;
            members.push_back(u);
            for (int c : children[static_cast<size_t>(u)])
                if (!removed[static_cast<size_t>(c)]) stack.push_back(c);
        }
        fam.clusters.push_back(VertexSet(std::move(members)));
    }
    return fam;
}

}  // namespace perturb
