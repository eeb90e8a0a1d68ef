#include "perturb/minor_params.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

#include "perturb/random_source.hpp"

namespace perturb {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[static_cast<size_t>(u)] |= 1u << v;
    return adj;
}

// Neighbourhood of v reachable through vertices of `via` only; endpoints
// outside `via` (and not v itself) are counted.
int reach_degree(const std::vector<std::uint32_t>& adj, std::uint32_t via, int v) {
    std::uint32_t frontier = 1u << v;
    std::uint32_t reach = frontier;
    std::uint32_t boundary = 0;
    while (frontier) {
        std::uint32_t nbrs = 0;
        std::uint32_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            nbrs |= adj[static_cast<size_t>(u)];
        }
        boundary |= nbrs & ~via;
        frontier = nbrs & via & ~reach;
        reach |= frontier;
    }
    return std::popcount(boundary & ~(1u << v));
}

}  // namespace

int treewidth_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("treewidth_exact: |V| <= 20 required");
    if (n == 0) return 0;
    auto adj = adjacency_masks(g);
    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> dp(static_cast<size_t>(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n;  // width never exceeds n - 1
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t prev = s & ~(1u << v);
            int width = std::max<int>(dp[prev], reach_degree(adj, prev, v));
            best = std::min(best, width);
        }
        dp[s] = static_cast<std::uint8_t>(best);
    }
    return dp[full];
}

namespace {

struct TreedepthSolver {
    const std::vector<std::uint32_t>& adj;
    std::vector<std::int8_t> memo;

    int component_of(std::uint32_t mask, int v) const {
        std::uint32_t comp = 1u << v;
        std::uint32_t frontier = comp;
        while (frontier) {
            std::uint32_t nbrs = 0;
            std::uint32_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                nbrs |= adj[static_cast<size_t>(u)];
            }
            frontier = nbrs & mask & ~comp;
            comp |= frontier;
        }
        return static_cast<int>(comp);
    }

    int solve(std::uint32_t mask) {
        if (mask == 0) return 0;
        if (std::popcount(mask) == 1) return 1;
        if (memo[mask] >= 0) return memo[mask];

        std::uint32_t first_comp =
            static_cast<std::uint32_t>(component_of(mask, std::countr_zero(mask)));
        int result;
        if (first_comp != mask) {
            result = solve(first_comp);
            std::uint32_t rest = mask & ~first_comp;
            while (rest) {
                std::uint32_t comp =
                    static_cast<std::uint32_t>(component_of(rest, std::countr_zero(rest)));
                result = std::max(result, solve(comp));
                rest &= ~comp;
            }
        } else {
            result = std::numeric_limits<int>::max();
            std::uint32_t rest = mask;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                result = std::min(result, 1 + solve(mask & ~(1u << v)));
            }
        }
        memo[mask] = static_cast<std::int8_t>(result);
        return result;
    }
};

}  // namespace

int treedepth_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 14) throw std::invalid_argument("treedepth_exact: |V| <= 14 required");
    if (n == 0) return 0;
    auto adj = adjacency_masks(g);
    TreedepthSolver solver{adj, std::vector<std::int8_t>(1u << n, -1)};
    return solver.solve((1u << n) - 1);
}

int ringel_youngs(int t) {
    if (t < 3) return 0;
    return ((t - 3) * (t - 4) + 11) / 12;
}

namespace {

// One greedy contraction pass: repeatedly merge a minimum-degree meta-vertex
// with its minimum-degree neighbour (random tie-breaking via a per-pass key)
// until the meta-graph is complete; isolated meta-vertices are deleted.
int greedy_contraction_pass(const Graph& g, Rng& rng, std::vector<std::vector<int>>& members_out) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> nb(static_cast<size_t>(n));
    std::vector<std::vector<int>> members(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        nb[static_cast<size_t>(v)].assign(g.neighbors(v).begin(), g.neighbors(v).end());
        members[static_cast<size_t>(v)] = {v};
    }
    std::vector<std::uint64_t> key(static_cast<size_t>(n));
    for (auto& k : key) k = rng.next_u64();

    // (degree, tie key, id) ordering
    std::set<std::tuple<int, std::uint64_t, int>> queue;
    std::vector<char> alive(static_cast<size_t>(n), 1);
    for (int v = 0; v < n; ++v)
        queue.insert({static_cast<int>(nb[static_cast<size_t>(v)].size()), key[static_cast<size_t>(v)], v});

    std::int64_t k_alive = n;
    std::int64_t edges = g.edge_count();

    auto erase_entry = [&](int v) {
        queue.erase({static_cast<int>(nb[static_cast<size_t>(v)].size()), key[static_cast<size_t>(v)], v});
    };
    auto insert_entry = [&](int v) {
        queue.insert({static_cast<int>(nb[static_cast<size_t>(v)].size()), key[static_cast<size_t>(v)], v});
    };
    auto remove_from = [&](std::vector<int>& list, int v) {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        if (it != list.end() && *it == v) list.erase(it);
    };

    while (k_alive > 1 && edges < k_alive * (k_alive - 1) / 2) {
        auto [deg, dkey, u] = *queue.begin();
        if (deg == 0) {
            queue.erase(queue.begin());
            alive[static_cast<size_t>(u)] = 0;
            --k_alive;
            continue;
        }
        // minimum-degree neighbour of u
        int v = -1;
        std::pair<int, std::uint64_t> best{std::numeric_limits<int>::max(), 0};
        for (int w : nb[static_cast<size_t>(u)]) {
            std::pair<int, std::uint64_t> cand{static_cast<int>(nb[static_cast<size_t>(w)].size()),
                                               key[static_cast<size_t>(w)]};
            if (v < 0 || cand < best) {
                best = cand;
                v = w;
            }
        }
        // merge v into u
        erase_entry(u);
        erase_entry(v);
        alive[static_cast<size_t>(v)] = 0;
        --k_alive;

        std::vector<int> merged;
        merged.reserve(nb[static_cast<size_t>(u)].size() + nb[static_cast<size_t>(v)].size());
        std::set_union(nb[static_cast<size_t>(u)].begin(), nb[static_cast<size_t>(u)].end(),
                       nb[static_cast<size_t>(v)].begin(), nb[static_cast<size_t>(v)].end(),
                       std::back_inserter(merged));
        std::int64_t common = static_cast<std::int64_t>(nb[static_cast<size_t>(u)].size()) +
                              static_cast<std::int64_t>(nb[static_cast<size_t>(v)].size()) -
                              static_cast<std::int64_t>(merged.size());
        edges -= 1 + common;
        remove_from(merged, u);
        remove_from(merged, v);

        for (int w : nb[static_cast<size_t>(v)]) {
            if (w == u) continue;
            erase_entry(w);
            remove_from(nb[static_cast<size_t>(w)], v);
            auto it = std::lower_bound(nb[static_cast<size_t>(w)].begin(), nb[static_cast<size_t>(w)].end(), u);
            if (it == nb[static_cast<size_t>(w)].end() || *it != u)
                nb[static_cast<size_t>(w)].insert(it, u);
            insert_entry(w);
        }
        nb[static_cast<size_t>(u)] = std::move(merged);
        nb[static_cast<size_t>(v)].clear();
        auto& mu = members[static_cast<size_t>(u)];
        auto& mv = members[static_cast<size_t>(v)];
        mu.insert(mu.end(), mv.begin(), mv.end());
        mv.clear();
        insert_entry(u);
    }

    members_out.clear();
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)]) members_out.push_back(std::move(members[static_cast<size_t>(v)]));
    return static_cast<int>(members_out.size());
}

bool verify_clique_witness(const Graph& g, const ClusterFamily& fam) {
    if (!fam.disjoint()) return false;
    const int k = fam.size();
    std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
    for (int i = 0; i < k; ++i) {
        const auto& c = fam.clusters[static_cast<size_t>(i)];
        if (c.empty() || !induces_connected(g, c.members)) return false;
        for (int v : c.members) owner[static_cast<size_t>(v)] = i;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int cu = owner[static_cast<size_t>(u)];
        if (cu < 0) continue;
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int cv = owner[static_cast<size_t>(v)];
            if (cv < 0 || cv == cu) continue;
            pairs.emplace_back(std::min(cu, cv), std::max(cu, cv));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return static_cast<std::int64_t>(pairs.size()) ==
           static_cast<std::int64_t>(k) * (k - 1) / 2;
}

}  // namespace

CliqueMinorWitness hadwiger_lower_bound(const Graph& g, int effort, std::uint64_t seed) {
    if (effort < 1) effort = 1;
    CliqueMinorWitness best;
    best.branch_sets.host_n = g.vertex_count();
    if (g.vertex_count() == 0) return best;

    // K_1 fallback witness.
    best.order = 1;
    best.branch_sets.clusters.push_back(VertexSet(std::vector<int>{0}));

    Seed root(seed);
    for (int attempt = 0; attempt < effort; ++attempt) {
        Rng rng(root.stream(static_cast<std::uint64_t>(attempt)));
        std::vector<std::vector<int>> members;
        int order = greedy_contraction_pass(g, rng, members);
        if (order <= best.order) continue;
        ClusterFamily fam;
        fam.host_n = g.vertex_count();
        for (auto& set : members) fam.clusters.push_back(VertexSet(std::move(set)));
        if (verify_clique_witness(g, fam)) {
            best.order = order;
            best.branch_sets = std::move(fam);
        }
    }
    return best;
}

namespace {

// Backtracking search for a K_k minor: assign vertices in id order to one of
// the existing branch sets, a new set (canonical first-use labels), or skip.
struct CliqueMinorSearch {
    const Graph& g;
    int k;
    std::vector<int> assign;

    bool feasible_at_leaf() const {
        std::vector<std::vector<int>> sets(static_cast<size_t>(k));
        for (int v = 0; v < g.vertex_count(); ++v)
            if (assign[static_cast<size_t>(v)] >= 0)
                sets[static_cast<size_t>(assign[static_cast<size_t>(v)])].push_back(v);
        for (const auto& s : sets)
            if (s.empty() || !induces_connected(g, s)) return false;
        std::vector<char> joined(static_cast<size_t>(k * k), 0);
        for (int u = 0; u < g.vertex_count(); ++u) {
            int cu = assign[static_cast<size_t>(u)];
            if (cu < 0) continue;
            for (int v : g.neighbors(u)) {
                int cv = assign[static_cast<size_t>(v)];
                if (cv >= 0) joined[static_cast<size_t>(cu * k + cv)] = 1;
            }
        }
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (!joined[static_cast<size_t>(a * k + b)]) return false;
        return true;
    }

    bool search(int v, int used) {
        const int n = g.vertex_count();
        if (used + (n - v) < k) return false;  // cannot open enough sets
        if (v == n) return used == k && feasible_at_leaf();
        for (int label = 0; label < std::min(used + 1, k); ++label) {
            assign[static_cast<size_t>(v)] = label;
            if (search(v + 1, std::max(used, label + 1))) return true;
        }
        assign[static_cast<size_t>(v)] = -1;
        return search(v + 1, used);
    }
};

bool has_clique_minor(const Graph& g, int k) {
    if (k <= 0) return true;
    if (k == 1) return g.vertex_count() >= 1;
    if (k > g.vertex_count()) return false;
    if (static_cast<std::int64_t>(k) * (k - 1) / 2 > g.edge_count()) return false;
    CliqueMinorSearch search{g, k, std::vector<int>(static_cast<size_t>(g.vertex_count()), -1)};
    return search.search(0, 0);
}

}  // namespace

int hadwiger_exact_small(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("hadwiger_exact_small: |V| <= 10 required");
    if (n == 0) return 0;
    int lower = hadwiger_lower_bound(g, 8, 0x9e3779b9u).order;
    int upper = std::min(n, treewidth_exact(g) + 1);
    for (int k = upper; k > lower; --k)
        if (has_clique_minor(g, k)) return k;
    return lower;
}

int genus_lower_bound(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    int euler = 0;
    if (n >= 3) {
        std::int64_t numer = m - 3 * n + 6;
        if (numer > 0) euler = static_cast<int>((numer + 5) / 6);
    }
    int h = hadwiger_lower_bound(g, 4, 0xC0FFEEu).order;
    return std::max(euler, ringel_youngs(h));
}

ParamBounds evaluate_bounds(const Graph& g, int effort, std::uint64_t seed) {
    ParamBounds out;
    auto witness = hadwiger_lower_bound(g, effort, seed);
    out.hadwiger_lb = witness.order;
    out.witness = std::move(witness.branch_sets);
    out.h_method = "clique-witness";

    out.tw_lb = std::max(0, out.hadwiger_lb - 1);
    out.tw_method = "clique-witness";
    out.td_lb = std::max(out.tw_lb, g.vertex_count() >= 1 ? 1 : 0);
    out.td_method = "tw-relation";

    int euler = 0;
    if (g.vertex_count() >= 3) {
        std::int64_t numer = g.edge_count() - 3 * static_cast<std::int64_t>(g.vertex_count()) + 6;
        if (numer > 0) euler = static_cast<int>((numer + 5) / 6);
    }
    int ry = ringel_youngs(out.hadwiger_lb);
    out.genus_lb = std::max(euler, ry);
    out.genus_method = euler >= ry ? "euler" : "ringel-youngs";
    return out;
}

TheoremBound theorem_bound(const BoundFormulaInput& in) {
    if (in.delta < 1) throw std::domain_error("theorem_bound: delta >= 1 required");
    TheoremBound out;
    out.n2p = in.n * in.n * in.p;
    if (!(out.n2p > 1)) throw std::domain_error("theorem_bound: n^2 p > 1 required");
    const double nan = std::numeric_limits<double>::quiet_NaN();

    out.L = 19200.0 * in.C * in.delta;
    out.M = (96.0 * in.C * in.delta) * (96.0 * in.C * in.delta) / out.n2p;
    out.m = out.n2p / out.L;
    out.q = 1.0 - std::exp(-out.M);
    out.clique_branch = in.delta > std::sqrt(out.n2p * std::log(out.n2p));

    if (out.clique_branch) {
        double mi = std::floor(out.m);
        out.tw = std::max(0.0, mi - 1.0);
        out.td = mi;
        out.hadwiger = mi;
        out.genus = ringel_youngs(static_cast<int>(mi));
        out.htilde_branch = 0;
    } else {
        out.tw = in.r * out.m;
        out.td = in.r * out.m;
        out.genus = in.r * out.m * out.m * out.q;
        if (out.q < in.C_h / out.m) {
            out.htilde_branch = 1;
            out.hadwiger = in.r_h * std::sqrt(out.m);
        } else if (out.q <= 0.5) {
            out.htilde_branch = 2;
            double mq = out.m * out.q;
            double base = std::log(mq) / std::log(1.0 / (1.0 - out.q));
            out.hadwiger = (mq > 1.0 && base > 0) ? out.m / (2.0 * std::sqrt(base)) : nan;
        } else {
            out.htilde_branch = 3;
            out.hadwiger = out.m > 1.0 ? out.m / (2.0 * std::sqrt(std::log2(out.m))) : nan;
        }
    }

    out.cor_tw = in.r * out.n2p / in.delta;
    out.cor_td = out.cor_tw;
    double ratio = out.n2p / in.delta;
    out.cor_genus = in.r * std::min(out.n2p, ratio * ratio);

    const double sn = std::sqrt(out.n2p);
    const double st = std::sqrt(out.n2p * std::log(out.n2p));
    if (in.delta <= sn) {
        out.cor_hadwiger_branch = 1;
        out.cor_hadwiger =
            in.delta > 1.0 ? in.r * std::sqrt(out.n2p / std::log(in.delta)) : nan;
    } else if (in.delta <= st) {
        out.cor_hadwiger_branch = 2;
        out.cor_hadwiger = in.r * out.n2p / (in.delta * std::sqrt(std::log(in.delta)));
    } else {
        out.cor_hadwiger_branch = 3;
        out.cor_hadwiger = in.r * out.n2p / in.delta;
    }
    return out;
}

}  // namespace perturb
