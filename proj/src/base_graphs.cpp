#include "perturb/base_graphs.hpp"

#include <algorithm>
#include <cmath>

#include "perturb/random_source.hpp"

namespace perturb {

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph gen_star(int n) {
    if (n < 2) throw std::invalid_argument("gen_star: n >= 2 required");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, edges);
}

Graph gen_bounded_degree_tree(int n, int max_degree, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_bounded_degree_tree: n >= 1 required");
    if (max_degree < 2)
        throw std::invalid_argument("gen_bounded_degree_tree: max_degree >= 2 required");
    Rng rng(seed);
    std::vector<int> degree(static_cast<size_t>(n), 0);
    std::vector<int> eligible;  // earlier vertices with residual capacity
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            size_t pick = static_cast<size_t>(rng.below(eligible.size()));
            int parent = eligible[pick];
            edges.emplace_back(parent, i);
            if (++degree[static_cast<size_t>(parent)] == max_degree) {
                eligible[pick] = eligible.back();
                eligible.pop_back();
            }
            degree[static_cast<size_t>(i)] = 1;
        }
        if (degree[static_cast<size_t>(i)] < max_degree) eligible.push_back(i);
    }
    return Graph::from_edges(n, edges);
}

Caterpillar gen_caterpillar(int n, int delta) {
    if (delta < 3 || n < delta)
        throw std::invalid_argument("gen_caterpillar: n >= delta >= 3 required");
    const int spine_len = (n + delta - 1) / delta;
    const int leaf_total = n - spine_len;

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine_len; ++i) edges.emplace_back(i, i + 1);

    // Distribute leaves as evenly as possible; n >= delta guarantees at most
    // delta - 1 leaves per spine vertex, so the maximum degree is delta + 1.
    const int base = leaf_total / spine_len;
    const int extra = leaf_total % spine_len;
    int next = spine_len;
    std::vector<int> spine_ids, leaf_ids;
    for (int i = 0; i < spine_len; ++i) {
        spine_ids.push_back(i);
        int count = base + (i < extra ? 1 : 0);
        for (int j = 0; j < count; ++j) {
            edges.emplace_back(i, next);
            leaf_ids.push_back(next);
            ++next;
        }
    }

    Caterpillar out;
    out.graph = Graph::from_edges(n, edges);
    out.spine = VertexSet(std::move(spine_ids));
    out.leaves = VertexSet(std::move(leaf_ids));
    return out;
}

namespace {

// Largest integer x with floor ceil(2/(cnp)) <= x <= floor(3/(cnp)).
int derive_tree_size_cap(double cnp) {
    if (!(cnp > 0)) throw std::invalid_argument("tree size cap: c*n*p must be positive");
    int lo = static_cast<int>(std::ceil(2.0 / cnp));
    int hi = static_cast<int>(std::floor(3.0 / cnp));
    if (lo < 1) lo = 1;
    if (hi < lo)
        throw std::invalid_argument("tree size cap: no integer x with 2/(cnp) <= x <= 3/(cnp)");
    return hi;
}

// size_i = min(x, budget left after reserving one vertex for each later set):
// front-loaded sizes x, x, ..., r, 1, ..., 1 summing to budget exactly.
std::vector<int> front_loaded_sizes(std::int64_t budget, int t, int x) {
    std::vector<int> sizes(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
        std::int64_t reserve = t - 1 - i;
        int s = static_cast<int>(std::min<std::int64_t>(x, budget - reserve));
        sizes[static_cast<size_t>(i)] = s;
        budget -= s;
    }
    return sizes;
}

}  // namespace

StarOfStars gen_star_of_stars(int n, double p, double c, int t_override, int x_override) {
    if (n < 3) throw std::invalid_argument("gen_star_of_stars: n >= 3 required");
    const double cn2p = c * static_cast<double>(n) * static_cast<double>(n) * p;
    const int x = x_override > 0 ? x_override : derive_tree_size_cap(c * n * p);

    int t = t_override;
    if (t <= 0) {
        // Maximal t in [c n^2 p / 2, c n^2 p] leaving every star nonempty.
        t = static_cast<int>(std::min<double>(std::floor(cn2p), n - 1));
        if (t < std::ceil(cn2p / 2.0))
            throw std::invalid_argument(
                "gen_star_of_stars: no t with c*n^2*p/2 <= t <= c*n^2*p and t <= n-1");
    }
    if (t < 1 || t > n - 1)
        throw std::invalid_argument("gen_star_of_stars: t must satisfy 1 <= t <= n-1");
    if (static_cast<std::int64_t>(n) > 1 + static_cast<std::int64_t>(x) * t)
        throw std::invalid_argument("gen_star_of_stars: n <= 1 + x*t violated");

    auto sizes = front_loaded_sizes(n - 1, t, x);

    std::vector<std::pair<int, int>> edges;
    ClusterFamily stars;
    stars.host_n = n;
    int next = 1;
    for (int i = 0; i < t; ++i) {
        int centre = next;
        edges.emplace_back(0, centre);
        std::vector<int> members{centre};
        for (int j = 1; j < sizes[static_cast<size_t>(i)]; ++j) {
            edges.emplace_back(centre, centre + j);
            members.push_back(centre + j);
        }
        next += sizes[static_cast<size_t>(i)];
        stars.clusters.push_back(VertexSet(std::move(members)));
    }

    StarOfStars out;
    out.graph = Graph::from_edges(n, edges);
    out.root = 0;
    out.stars = std::move(stars);
    out.t = t;
    out.x = x;
    std::vector<int> leaf_ids;
    for (int v = 1; v < n; ++v)
        if (out.graph.degree(v) <= 1) leaf_ids.push_back(v);
    out.leaves = VertexSet(std::move(leaf_ids));
    return out;
}

void append_binary_tree_edges(std::vector<std::pair<int, int>>& edges, int base, int size) {
    for (int j = 0; j < size; ++j) {
        if (2 * j + 1 < size) edges.emplace_back(base + j, base + 2 * j + 1);
        if (2 * j + 2 < size) edges.emplace_back(base + j, base + 2 * j + 2);
    }
}

PathWithTrees gen_path_with_trees(int n, int delta, double p, double c, int t_override,
                                  int x_override) {
    if (delta < 3) throw std::invalid_argument("gen_path_with_trees: delta >= 3 required");
    const int x = x_override > 0 ? x_override : derive_tree_size_cap(c * n * p);

    auto path_len_of = [&](int t) { return (t + delta - 1) / delta; };
    auto capacity_ok = [&](int t) {
        return static_cast<std::int64_t>(path_len_of(t)) * (delta - 2) >= t;
    };
    auto vertex_window_ok = [&](int t) {
        std::int64_t lo = path_len_of(t) + t;
        std::int64_t hi = path_len_of(t) + static_cast<std::int64_t>(t) * x;
        return lo <= n && n <= hi;
    };

    int t = t_override;
    if (t <= 0) {
        const double cn2p = c * static_cast<double>(n) * static_cast<double>(n) * p;
        int hi = static_cast<int>(std::floor(cn2p));
        int lo = std::max(1, static_cast<int>(std::ceil(cn2p / 2.0)));
        for (int cand = hi; cand >= lo; --cand) {
            if (capacity_ok(cand) && vertex_window_ok(cand)) {
                t = cand;
                break;
            }
        }
        if (t <= 0)
            throw std::invalid_argument(
                "gen_path_with_trees: no t in [c*n^2*p/2, c*n^2*p] satisfies the per-vertex "
                "capacity ceil(t/delta)*(delta-2) >= t and the vertex budget "
                "path+t <= n <= path+t*x");
    }
    if (!capacity_ok(t))
        throw std::invalid_argument(
            "gen_path_with_trees: per-vertex capacity violated: ceil(t/delta)*(delta-2) < t");
    if (!vertex_window_ok(t))
        throw std::invalid_argument("gen_path_with_trees: vertex budget path+t <= n <= path+t*x violated");

    const int path_len = path_len_of(t);
    auto sizes = front_loaded_sizes(n - path_len, t, x);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < path_len; ++i) edges.emplace_back(i, i + 1);

    ClusterFamily trees;
    trees.host_n = n;
    int next = path_len;
    const int per_vertex = delta - 2;
    for (int i = 0; i < t; ++i) {
        int size = sizes[static_cast<size_t>(i)];
        append_binary_tree_edges(edges, next, size);
        int hook = next + size - 1;  // a leaf of the tree (the tree itself if size 1)
        edges.emplace_back(i / per_vertex, hook);
        std::vector<int> members(static_cast<size_t>(size));
        for (int j = 0; j < size; ++j) members[static_cast<size_t>(j)] = next + j;
        trees.clusters.push_back(VertexSet(std::move(members)));
        next += size;
    }

    PathWithTrees out;
    out.graph = Graph::from_edges(n, edges);
    std::vector<int> path_ids(static_cast<size_t>(path_len));
    for (int i = 0; i < path_len; ++i) path_ids[static_cast<size_t>(i)] = i;
    out.path_vertices = VertexSet(std::move(path_ids));
    out.trees = std::move(trees);
    out.t = t;
    out.x = x;
    return out;
}

Graph gen_path_bundle(int n, int k_paths) {
    if (k_paths < 1) throw std::invalid_argument("gen_path_bundle: k_paths >= 1 required");
    if (n < k_paths) throw std::invalid_argument("gen_path_bundle: n >= k_paths required");
    std::vector<std::pair<int, int>> edges;
    const int base = n / k_paths;
    const int extra = n % k_paths;
    int next = 0;
    for (int i = 0; i < k_paths; ++i) {
        int len = base + (i < extra ? 1 : 0);
        for (int j = 0; j + 1 < len; ++j) edges.emplace_back(next + j, next + j + 1);
        next += len;
    }
    return Graph::from_edges(n, edges);
}

Family parse_family(const std::string& tag) {
    if (tag == "path") return Family::Path;
    if (tag == "star") return Family::Star;
    if (tag == "bounded-degree-random-tree") return Family::BoundedDegreeRandomTree;
    if (tag == "caterpillar-path") return Family::CaterpillarPath;
    if (tag == "star-of-stars") return Family::StarOfStars;
    if (tag == "path-with-trees") return Family::PathWithTrees;
    if (tag == "path-bundle") return Family::PathBundle;
    throw std::invalid_argument("unknown family: " + tag);
}

std::string family_tag(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Star: return "star";
        case Family::BoundedDegreeRandomTree: return "bounded-degree-random-tree";
        case Family::CaterpillarPath: return "caterpillar-path";
        case Family::StarOfStars: return "star-of-stars";
        case Family::PathWithTrees: return "path-with-trees";
        case Family::PathBundle: return "path-bundle";
    }
    throw std::logic_error("family_tag: unreachable");
}

}  // namespace perturb
