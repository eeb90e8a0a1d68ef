#include "perturb/partition_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "perturb/fragmentation.hpp"

namespace perturb {

std::string to_string(PipelineMode m) {
    return m == PipelineMode::Strict ? "strict" : "relaxed";
}
std::string to_string(EdgesMode m) {
    return m == EdgesMode::RandomOnly ? "random-only" : "all";
}
PipelineMode parse_pipeline_mode(const std::string& s) {
    if (s == "strict") return PipelineMode::Strict;
    if (s == "relaxed") return PipelineMode::Relaxed;
    throw std::invalid_argument("unknown pipeline mode: " + s);
}
EdgesMode parse_edges_mode(const std::string& s) {
    if (s == "random-only") return EdgesMode::RandomOnly;
    if (s == "all") return EdgesMode::All;
    throw std::invalid_argument("unknown edges mode: " + s);
}

int PipelineParams::ell() const {
    if (ell_override > 0) return ell_override;
    double np = static_cast<double>(n) * p;
    if (!(np > 0)) throw std::invalid_argument("PipelineParams: n*p must be positive to derive ell");
    return std::max(1, static_cast<int>(std::ceil(96.0 * C / np)));
}

double PipelineParams::window_scale() const {
    if (window_a > 0) return window_a;
    if (!(C > 0)) throw std::invalid_argument("PipelineParams: C must be positive");
    return C_prime * delta / C;
}

double PipelineParams::ci_scale_effective() const {
    if (ci_scale >= 0) return ci_scale;
    return mode == PipelineMode::Strict ? 1.0 : 0.0;
}

std::vector<std::string> PipelineParams::strict_violations() const {
    std::vector<std::string> out;
    if (n < 1) out.push_back("n >= 1 violated");
    if (!(C >= 8.0)) out.push_back("C >= 8 violated");
    if (!(C_prime >= C)) out.push_back("C' >= C violated");
    if (n >= 1 && (!(p > 0.0) || p > 2.0 / n)) out.push_back("0 < p <= 2/n violated");
    if (n >= 1 && p > 0.0 && static_cast<double>(delta) > n2p() / (4800.0 * C_prime))
        out.push_back("delta <= n^2 p / (4800 C') violated");
    return out;
}

void PipelineParams::ensure_strict() const {
    auto violations = strict_violations();
    if (violations.empty()) return;
    std::string msg = "strict mode refused:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw std::domain_error(msg);
}

std::vector<int> LevelDecomposition::active_levels() const {
    std::vector<int> out;
    for (const auto& lvl : levels)
        if (lvl.active) out.push_back(lvl.index);
    return out;
}

LevelDecomposition dyadic_levels(const ClusterFamily& fam, const PipelineParams& params) {
    const int ell = params.ell();
    const double n2p = params.n2p();
    const double scale = params.ci_scale_effective();
    const double a = params.window_scale();

    int cap = 1;
    while (static_cast<double>(std::int64_t{1} << cap) < a) ++cap;

    LevelDecomposition dec;
    dec.cluster_level.resize(static_cast<size_t>(fam.size()), 0);
    int max_level = cap;
    for (int idx = 0; idx < fam.size(); ++idx) {
        std::int64_t s = fam.clusters[static_cast<size_t>(idx)].size();
        if (s < ell)
            throw std::invalid_argument("dyadic_levels: cluster smaller than the ell floor");
        int i = 1;
        while (s >= static_cast<std::int64_t>(ell) << i) ++i;
        dec.cluster_level[static_cast<size_t>(idx)] = i;
        max_level = std::max(max_level, i);
    }

    dec.levels.resize(static_cast<size_t>(max_level));
    dec.level_clusters.resize(static_cast<size_t>(max_level));
    for (int i = 1; i <= max_level; ++i) {
        auto& lvl = dec.levels[static_cast<size_t>(i - 1)];
        lvl.index = i;
        lvl.u = static_cast<std::int64_t>(ell) << (i - 1);
        lvl.class_a1 = std::pow(2.0, i) > std::pow(n2p, 2.0 / 3.0);
    }
    for (int idx = 0; idx < fam.size(); ++idx) {
        int i = dec.cluster_level[static_cast<size_t>(idx)];
        dec.level_clusters[static_cast<size_t>(i - 1)].push_back(idx);
        dec.levels[static_cast<size_t>(i - 1)].cluster_count += 1;
        dec.levels[static_cast<size_t>(i - 1)].mass += fam.clusters[static_cast<size_t>(idx)].size();
    }
    for (int i = 1; i <= max_level; ++i) {
        auto& ids = dec.level_clusters[static_cast<size_t>(i - 1)];
        std::sort(ids.begin(), ids.end(), [&](int x, int y) {
            int mx = fam.clusters[static_cast<size_t>(x)].min_id();
            int my = fam.clusters[static_cast<size_t>(y)].min_id();
            return mx != my ? mx < my : x < y;
        });
        auto& lvl = dec.levels[static_cast<size_t>(i - 1)];
        if (scale == 0.0) {
            lvl.activity_threshold = 0.0;
        } else {
            double term1 = 80.0 / (static_cast<double>(lvl.u) * params.p);
            double term2 = n2p > 1.0
                               ? static_cast<double>(params.n) / (50.0 * std::log2(n2p))
                               : std::numeric_limits<double>::infinity();
            lvl.activity_threshold = scale * std::max(term1, term2);
        }
        lvl.active = lvl.cluster_count > 0 &&
                     static_cast<double>(lvl.mass) >= lvl.activity_threshold;
    }
    return dec;
}

namespace {

std::vector<std::vector<int>> level_meta_adjacency(const ClusterFamily& fam,
                                                   const std::vector<int>& level_clusters,
                                                   const Graph& link_graph) {
    const int k = static_cast<int>(level_clusters.size());
    std::vector<int> pos(static_cast<size_t>(link_graph.vertex_count()), -1);
    for (int i = 0; i < k; ++i)
        for (int v : fam.clusters[static_cast<size_t>(level_clusters[static_cast<size_t>(i)])].members)
            pos[static_cast<size_t>(v)] = i;
    std::vector<std::vector<int>> adj(static_cast<size_t>(k));
    for (int u = 0; u < link_graph.vertex_count(); ++u) {
        int pu = pos[static_cast<size_t>(u)];
        if (pu < 0) continue;
        for (int v : link_graph.neighbors(u)) {
            if (v <= u) continue;
            int pv = pos[static_cast<size_t>(v)];
            if (pv < 0 || pv == pu) continue;
            adj[static_cast<size_t>(pu)].push_back(pv);
            adj[static_cast<size_t>(pv)].push_back(pu);
        }
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

// Deepest root-to-leaf DFS stack path over all components, roots and
// neighbours visited in ascending order.
std::vector<int> deepest_dfs_path(const std::vector<std::vector<int>>& adj) {
    const int k = static_cast<int>(adj.size());
    if (k == 0) return {};
    std::vector<int> parent(static_cast<size_t>(k), -2);
    std::vector<int> depth(static_cast<size_t>(k), 0);
    int best = -1, best_depth = -1;
    std::vector<std::pair<int, size_t>> stack;
    for (int root = 0; root < k; ++root) {
        if (parent[static_cast<size_t>(root)] != -2) continue;
        parent[static_cast<size_t>(root)] = -1;
        stack.emplace_back(root, 0);
        if (best_depth < 0) {
            best_depth = 0;
            best = root;
        }
        while (!stack.empty()) {
            auto [u, it] = stack.back();
            if (it == adj[static_cast<size_t>(u)].size()) {
                stack.pop_back();
                continue;
            }
            ++stack.back().second;
            int v = adj[static_cast<size_t>(u)][it];
            if (parent[static_cast<size_t>(v)] != -2) continue;
            parent[static_cast<size_t>(v)] = u;
            depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
            if (depth[static_cast<size_t>(v)] > best_depth) {
                best_depth = depth[static_cast<size_t>(v)];
                best = v;
            }
            stack.emplace_back(v, 0);
        }
    }
    std::vector<int> path;
    for (int v = best; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

LinkedLevel link_within_level(const ClusterFamily& fam, const std::vector<int>& level_clusters,
                              bool class_a1, const Graph& link_graph) {
    const int k = static_cast<int>(level_clusters.size());
    LinkedLevel out;
    out.target = class_a1 ? k : (k + 4) / 5;
    if (k == 0) {
        out.shortfall = out.target > 0;
        return out;
    }
    auto adj = level_meta_adjacency(fam, level_clusters, link_graph);

    std::vector<int> positions;
    if (class_a1) {
        // longest contiguous run of the fixed ordering with consecutive links
        auto linked = [&](int a, int b) {
            const auto& nb = adj[static_cast<size_t>(a)];
            return std::binary_search(nb.begin(), nb.end(), b);
        };
        int best_start = 0, best_len = 1, cur_start = 0;
        for (int j = 1; j < k; ++j) {
            if (!linked(j - 1, j)) {
                if (j - cur_start > best_len) {
                    best_len = j - cur_start;
                    best_start = cur_start;
                }
                cur_start = j;
            }
        }
        if (k - cur_start > best_len) {
            best_len = k - cur_start;
            best_start = cur_start;
        }
        positions.resize(static_cast<size_t>(best_len));
        for (int j = 0; j < best_len; ++j) positions[static_cast<size_t>(j)] = best_start + j;
    } else {
        positions = deepest_dfs_path(adj);
    }

    out.sequence.reserve(positions.size());
    for (int posn : positions) {
        int cid = level_clusters[static_cast<size_t>(posn)];
        out.sequence.push_back(cid);
        out.mass += fam.clusters[static_cast<size_t>(cid)].size();
    }
    out.shortfall = static_cast<int>(out.sequence.size()) < out.target;
    return out;
}

ConcatResult concatenate_levels(const ClusterFamily& fam, std::vector<LinkedLevel>& linked,
                                const Graph& link_graph) {
    ConcatResult out;
    const int t = static_cast<int>(linked.size());
    if (t == 0) return out;
    for (const auto& lvl : linked) out.linked_mass_total += lvl.mass;

    // per-level 1-based prefix masses
    std::vector<std::vector<std::int64_t>> prefix(static_cast<size_t>(t));
    std::vector<int> a(static_cast<size_t>(t)), b(static_cast<size_t>(t));
    std::vector<char> fallback(static_cast<size_t>(t), 0);
    for (int j = 0; j < t; ++j) {
        const auto& seq = linked[static_cast<size_t>(j)].sequence;
        const int m = static_cast<int>(seq.size());
        auto& pre = prefix[static_cast<size_t>(j)];
        pre.assign(static_cast<size_t>(m) + 1, 0);
        for (int i = 0; i < m; ++i)
            pre[static_cast<size_t>(i + 1)] =
                pre[static_cast<size_t>(i)] + fam.clusters[static_cast<size_t>(seq[static_cast<size_t>(i)])].size();
        const std::int64_t mass = pre[static_cast<size_t>(m)];
        int aj = 1;
        while (10 * pre[static_cast<size_t>(aj)] < mass) ++aj;
        int bj = m;
        while (10 * (mass - pre[static_cast<size_t>(bj - 1)]) < mass) --bj;
        a[static_cast<size_t>(j)] = aj;
        b[static_cast<size_t>(j)] = bj;
        if (!(aj < bj)) {
            fallback[static_cast<size_t>(j)] = 1;
            out.fallback_levels.push_back(linked[static_cast<size_t>(j)].level_index);
            linked[static_cast<size_t>(j)].shortfall = linked[static_cast<size_t>(j)].shortfall;
        }
    }

    // seam (j, j+1): lexicographically smallest (beta, alpha) with a link edge
    // between position beta of level j (past its 1/10 suffix cut) and position
    // alpha of level j+1 (inside its 1/10 prefix cut)
    std::vector<int> entry(static_cast<size_t>(t), 1), exit_at(static_cast<size_t>(t), 0);
    for (int j = 0; j < t; ++j)
        exit_at[static_cast<size_t>(j)] = static_cast<int>(linked[static_cast<size_t>(j)].sequence.size());
    const int n_host = link_graph.vertex_count();
    for (int j = 0; j + 1 < t; ++j) {
        const auto& seq_a = linked[static_cast<size_t>(j)].sequence;
        const auto& seq_b = linked[static_cast<size_t>(j + 1)].sequence;
        int beta_lo = fallback[static_cast<size_t>(j)] ? entry[static_cast<size_t>(j)]
                                                       : b[static_cast<size_t>(j)] + 1;
        int alpha_hi = fallback[static_cast<size_t>(j + 1)]
                           ? static_cast<int>(seq_b.size())
                           : a[static_cast<size_t>(j + 1)];
        std::vector<int> pos_a(static_cast<size_t>(n_host), 0), pos_b(static_cast<size_t>(n_host), 0);
        for (int i = beta_lo; i <= static_cast<int>(seq_a.size()); ++i)
            for (int v : fam.clusters[static_cast<size_t>(seq_a[static_cast<size_t>(i - 1)])].members)
                pos_a[static_cast<size_t>(v)] = i;
        for (int i = 1; i <= alpha_hi; ++i)
            for (int v : fam.clusters[static_cast<size_t>(seq_b[static_cast<size_t>(i - 1)])].members)
                pos_b[static_cast<size_t>(v)] = i;
        std::pair<int, int> best{0, 0};
        for (int u = 0; u < n_host; ++u) {
            int pu_a = pos_a[static_cast<size_t>(u)], pu_b = pos_b[static_cast<size_t>(u)];
            if (pu_a == 0 && pu_b == 0) continue;
            for (int v : link_graph.neighbors(u)) {
                if (v <= u) continue;
                int pv_a = pos_a[static_cast<size_t>(v)], pv_b = pos_b[static_cast<size_t>(v)];
                std::pair<int, int> cand{0, 0};
                if (pu_a > 0 && pv_b > 0) cand = {pu_a, pv_b};
                else if (pv_a > 0 && pu_b > 0) cand = {pv_a, pu_b};
                else continue;
                if (best.first == 0 || cand < best) best = cand;
            }
        }
        if (best.first == 0) {
            out.seam_failed = true;
            out.seam_failure = "no link edge between level " +
                               std::to_string(linked[static_cast<size_t>(j)].level_index) +
                               " and level " +
                               std::to_string(linked[static_cast<size_t>(j + 1)].level_index);
            return out;
        }
        exit_at[static_cast<size_t>(j)] = best.first;
        entry[static_cast<size_t>(j + 1)] = best.second;
    }

    for (int j = 0; j < t; ++j) {
        const auto& seq = linked[static_cast<size_t>(j)].sequence;
        const auto& pre = prefix[static_cast<size_t>(j)];
        int from = entry[static_cast<size_t>(j)], to = exit_at[static_cast<size_t>(j)];
        if (from > to) {
            out.seam_failed = true;
            out.seam_failure = "empty kept run in level " +
                               std::to_string(linked[static_cast<size_t>(j)].level_index);
            return out;
        }
        for (int i = from; i <= to; ++i) out.sequence.push_back(seq[static_cast<size_t>(i - 1)]);
        std::int64_t kept = pre[static_cast<size_t>(to)] - pre[static_cast<size_t>(from - 1)];
        out.covered += kept;
        std::int64_t mass = pre.back();
        if (!fallback[static_cast<size_t>(j)] && 5 * kept < 4 * mass)
            throw std::logic_error("concatenate_levels: splice mass ledger violated");
    }
    return out;
}

MergeResult merge_sequence(const ClusterFamily& fam, const std::vector<int>& sequence,
                           double window_low) {
    MergeResult out;
    out.family.host_n = fam.host_n;
    std::vector<int> group;
    std::int64_t group_size = 0;
    for (int cid : sequence) {
        const auto& members = fam.clusters[static_cast<size_t>(cid)].members;
        if (static_cast<double>(members.size()) > window_low + 1e-9)
            throw std::invalid_argument("merge_sequence: cluster larger than the window floor");
        group.insert(group.end(), members.begin(), members.end());
        group_size += static_cast<std::int64_t>(members.size());
        if (static_cast<double>(group_size) >= window_low) {
            out.family.clusters.push_back(VertexSet(std::move(group)));
            group.clear();
            group_size = 0;
        }
    }
    out.discarded = group_size;
    return out;
}

bool verify_partition_contract(const Graph& r0, const ClusterFamily& fam, double window_low,
                               double window_high, double count_floor, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (fam.size() < 1) return fail("empty family");
    if (static_cast<double>(fam.size()) < count_floor - 1e-9) return fail("count below floor");
    try {
        fam.validate_against(r0);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    for (const auto& c : fam.clusters) {
        double s = static_cast<double>(c.size());
        if (s < window_low - 1e-9 || s > window_high + 1e-9) return fail("size outside window");
    }
    return true;
}

PartitionResult build_partition(const Graph& H, const Graph& G1, const PipelineParams& params) {
    if (params.mode == PipelineMode::Strict) params.ensure_strict();
    if (H.vertex_count() != params.n || G1.vertex_count() != params.n)
        throw std::invalid_argument("build_partition: vertex count mismatch");
    if (H.max_degree() > params.delta)
        throw std::invalid_argument("build_partition: delta below the actual maximum degree of H");

    const int ell = params.ell();
    const double a = params.window_scale();
    if (a < static_cast<double>(H.max_degree()))
        throw std::invalid_argument(
            "build_partition: window multiplier below the maximum degree; merge window unreachable");

    PartitionResult result;
    auto& report = result.report;
    report.ell = ell;
    report.window_low = a * ell;
    report.window_high = 2.0 * a * ell;
    report.coverage_target = params.coverage_fraction * params.n;
    if (params.mode == PipelineMode::Strict) {
        report.count_floor = params.n2p() / (9600.0 * params.C_prime * params.delta);
    } else {
        report.count_floor =
            std::max(1.0, std::ceil((report.coverage_target - report.window_low) / report.window_high));
    }
    result.family.host_n = params.n;

    Graph r0 = union_graphs(H, G1);
    const Graph& link_graph = params.edges_mode == EdgesMode::All ? r0 : G1;

    auto fail = [&](const std::string& stage, const std::string& reason) {
        report.success = false;
        report.fail_stage = stage;
        report.fail_reason = reason;
        return result;
    };

    // S1: fragment and bucket by dyadic size.
    ClusterFamily frag = fragment(H, ell);
    if (frag.size() == 0) return fail("S1", "fragmentation yielded no clusters (ell exceeds |V|)");
    LevelDecomposition dec = dyadic_levels(frag, params);
    auto active = dec.active_levels();
    report.levels = dec.levels;
    if (active.empty()) return fail("S1", "no active level");

    // S2: arrange each active level in a linked line.
    std::vector<LinkedLevel> linked;
    for (int i : active) {
        auto& info = dec.levels[static_cast<size_t>(i - 1)];
        LinkedLevel ll = link_within_level(frag, dec.level_clusters[static_cast<size_t>(i - 1)],
                                           info.class_a1, link_graph);
        ll.level_index = i;
        info.target = ll.target;
        info.linked_count = static_cast<int>(ll.sequence.size());
        info.linked_mass = ll.mass;
        info.shortfall = ll.shortfall;
        linked.push_back(std::move(ll));
    }

    // S3: splice the lines into one.
    ConcatResult cat = concatenate_levels(frag, linked, link_graph);
    for (int lvl : cat.fallback_levels) {
        dec.levels[static_cast<size_t>(lvl - 1)].whole_line_fallback = true;
        report.fallback_levels.push_back(lvl);
    }
    report.levels = dec.levels;
    report.s3_mass = cat.covered;
    if (cat.seam_failed) return fail("S3", cat.seam_failure);
    if (static_cast<double>(cat.covered) < report.coverage_target)
        return fail("S3", "covered mass " + std::to_string(cat.covered) + " below target");

    // S4: merge consecutive clusters into window-sized connected groups.
    MergeResult merged = merge_sequence(frag, cat.sequence, report.window_low);
    result.family = std::move(merged.family);
    report.discarded = merged.discarded;
    report.m = result.family.size();
    report.covered = result.family.covered();
    report.min_size = 0;
    report.max_size = 0;
    for (const auto& c : result.family.clusters) {
        std::int64_t s = c.size();
        report.min_size = report.min_size == 0 ? s : std::min(report.min_size, s);
        report.max_size = std::max(report.max_size, s);
    }
    // merge arithmetic: m >= (s3 mass - window_low) / window_high
    if (static_cast<double>(report.m) * report.window_high + report.window_low + 1e-6 <
        static_cast<double>(report.s3_mass))
        throw std::logic_error("build_partition: merge mass accounting violated");
    if (report.m < 1) return fail("S4", "no merged group reached the window floor");
    if (static_cast<double>(report.m) < report.count_floor - 1e-9)
        return fail("S4", "cluster count " + std::to_string(report.m) + " below floor");

    std::string why;
    report.contract_verified = verify_partition_contract(r0, result.family, report.window_low,
                                                         report.window_high, report.count_floor, &why);
    if (!report.contract_verified) return fail("validate", why);
    report.success = true;
    return result;
}

Graph meta_minor(const Graph& r0, const ClusterFamily& fam, const Graph& g2, EdgesMode mode) {
    if (r0.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("meta_minor: vertex count mismatch");
    fam.validate_against(r0);
    if (mode == EdgesMode::RandomOnly) return cluster_quotient(g2, fam);
    return cluster_quotient(union_graphs(r0, g2), fam);
}

}  // namespace perturb
