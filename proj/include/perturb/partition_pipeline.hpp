#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perturb/graph.hpp"

namespace perturb {

enum class PipelineMode { Strict, Relaxed };
enum class EdgesMode { RandomOnly, All };

std::string to_string(PipelineMode m);
std::string to_string(EdgesMode m);
PipelineMode parse_pipeline_mode(const std::string& s);
EdgesMode parse_edges_mode(const std::string& s);

/// Scale constants and knobs of the cluster-partition pipeline.
///
/// Strict mode uses the literal constants: ell = ceil(96 C / (np)), merge
/// window [ell a, 2 ell a] with a = C' delta / C, activity thresholds
/// c_i = max(80/(u_i p), n / (50 log2(n^2 p))), coverage target n/24 and
/// cluster-count floor n^2 p / (9600 C' delta); it also refuses inputs with
/// p > 2/n, C' < C, C < 8 or delta > n^2 p / (4800 C').
///
/// Relaxed mode keeps the same formulas but exposes the scale knobs: ell
/// override, window multiplier a, coverage fraction, and a multiplier on the
/// activity thresholds (default 0, which disables them).
struct PipelineParams {
    PipelineMode mode = PipelineMode::Relaxed;
    EdgesMode edges_mode = EdgesMode::RandomOnly;
    double C = 8.0;
    double C_prime = 8.0;
    int n = 0;
    double p = 0.0;
    int delta = 1;  // maximum degree of the base graph
    int ell_override = 0;
    double window_a = 0.0;  // 0 -> C' * delta / C
    double coverage_fraction = 1.0 / 24.0;
    double ci_scale = -1.0;  // <0 -> mode default (strict 1, relaxed 0)

    int ell() const;
    double window_scale() const;
    double ci_scale_effective() const;
    double n2p() const { return static_cast<double>(n) * n * p; }

    /// Violated strict-mode hypotheses, empty when none.
    std::vector<std::string> strict_violations() const;
    /// Throws std::domain_error listing the violations; call before sampling.
    void ensure_strict() const;
};

struct LevelInfo {
    int index = 0;          // dyadic level i, sizes in [2^{i-1} ell, 2^i ell)
    std::int64_t u = 0;     // 2^{i-1} ell
    int cluster_count = 0;  // n_i
    std::int64_t mass = 0;  // |V_i|
    double activity_threshold = 0.0;  // c_i
    bool active = false;
    bool class_a1 = false;  // 2^i > (n^2 p)^{2/3}: consecutive linking, else DFS path
    // linking stage outcome
    int target = 0;
    int linked_count = 0;       // m_i'
    std::int64_t linked_mass = 0;  // |V_i'|
    bool shortfall = false;
    bool whole_line_fallback = false;  // 1/10-prefix/suffix rule unsatisfiable
};

struct LevelDecomposition {
    std::vector<LevelInfo> levels;                  // index i stored at position i-1
    std::vector<std::vector<int>> level_clusters;   // per level: cluster ids by min member
    std::vector<int> cluster_level;                 // per cluster: level index
    std::vector<int> active_levels() const;
};

/// Buckets clusters into dyadic size levels and computes activity thresholds.
/// Requires every cluster size >= ell.
LevelDecomposition dyadic_levels(const ClusterFamily& fam, const PipelineParams& params);

struct LinkedLevel {
    int level_index = 0;
    std::vector<int> sequence;  // cluster ids; consecutive pairs joined in the link graph
    int target = 0;
    bool shortfall = false;
    std::int64_t mass = 0;
};

/// Arranges clusters of one level in a line such that the link graph has an
/// edge between consecutive clusters. Class-A1 levels use the fixed min-id
/// ordering and demand every consecutive pair linked (best contiguous run on
/// shortfall); other levels extract a deepest DFS path from the cluster
/// meta-graph with target ceil(n_i / 5).
LinkedLevel link_within_level(const ClusterFamily& fam, const std::vector<int>& level_clusters,
                              bool class_a1, const Graph& link_graph);

struct ConcatResult {
    std::vector<int> sequence;  // cluster ids across all active levels
    std::int64_t covered = 0;
    bool seam_failed = false;
    std::string seam_failure;
    std::vector<int> fallback_levels;
    std::int64_t linked_mass_total = 0;
};

/// Splices the per-level lines into one line: each level keeps a run that
/// contains everything strictly between the minimal 1/10-mass prefix and the
/// maximal 1/10-mass suffix, and consecutive levels are joined by a link edge
/// from the dropped suffix region into the next level's prefix region.
ConcatResult concatenate_levels(const ClusterFamily& fam, std::vector<LinkedLevel>& linked,
                                const Graph& link_graph);

struct MergeResult {
    ClusterFamily family;
    std::int64_t discarded = 0;
};

/// Greedy left-to-right grouping of consecutive clusters into vertex sets of
/// size in [window_low, 2 window_low); the trailing remainder is discarded.
/// Every cluster must have size <= window_low.
MergeResult merge_sequence(const ClusterFamily& fam, const std::vector<int>& sequence,
                           double window_low);

struct PipelineReport {
    bool success = false;
    std::string fail_stage;  // "", "pre", "S1", "S2", "S3", "S4", "validate"
    std::string fail_reason;
    int ell = 0;
    double window_low = 0.0, window_high = 0.0;
    double coverage_target = 0.0;
    double count_floor = 0.0;
    std::vector<LevelInfo> levels;
    std::vector<int> fallback_levels;
    std::int64_t s3_mass = 0;
    int m = 0;
    std::int64_t min_size = 0, max_size = 0;
    std::int64_t covered = 0;
    std::int64_t discarded = 0;
    bool contract_verified = false;
};

struct PartitionResult {
    ClusterFamily family;
    PipelineReport report;
};

/// Full pipeline: fragment the base graph, bucket clusters by size, link
/// within levels using link-graph edges, splice levels, merge into the size
/// window. The returned family is re-validated against H u G1 on every run;
/// the report can only claim success when the size window, count floor and
/// connectivity contracts all verify.
PartitionResult build_partition(const Graph& H, const Graph& G1, const PipelineParams& params);

/// Verifies the output contract of build_partition directly (used both
/// internally and by tests): disjoint, connected in r0, sizes within
/// [window_low, window_high], count >= count_floor.
bool verify_partition_contract(const Graph& r0, const ClusterFamily& fam, double window_low,
                               double window_high, double count_floor, std::string* why = nullptr);

/// Contracts the family over r0 u g2 (EdgesMode::All) or over g2 alone
/// (EdgesMode::RandomOnly, giving exactly the randomly exposed meta-edges).
Graph meta_minor(const Graph& r0, const ClusterFamily& fam, const Graph& g2, EdgesMode mode);

}  // namespace perturb
