#pragma once

#include <cstdint>
#include <string>

#include "perturb/graph.hpp"

namespace perturb {

/// Exact treewidth via dynamic programming over vertex subsets
/// (elimination-ordering formulation). Hard cap |V| <= 20.
int treewidth_exact(const Graph& g);

/// Exact treedepth via the recursive definition (1 for a single vertex,
/// 1 + min over deletions when connected, max over components otherwise),
/// memoized on vertex subsets. Hard cap |V| <= 14.
int treedepth_exact(const Graph& g);

/// ceil((t-3)(t-4)/12) for t >= 3, else 0: the genus of K_t.
int ringel_youngs(int t);

struct CliqueMinorWitness {
    int order = 0;
    ClusterFamily branch_sets;  // pairwise joined connected sets, one per clique vertex
};

/// Randomized greedy contraction with `effort` restarts; returns the largest
/// verified clique-minor witness found (a lower bound on the Hadwiger number).
/// Every returned witness is re-verified: branch sets disjoint, connected, and
/// pairwise joined by an edge.
CliqueMinorWitness hadwiger_lower_bound(const Graph& g, int effort, std::uint64_t seed);

/// Exact Hadwiger number by exhaustive search over partial partitions into
/// connected branch sets. Hard cap |V| <= 10.
int hadwiger_exact_small(const Graph& g);

/// max of the Euler-formula bound ceil((|E| - 3|V| + 6)/6) (clamped at 0,
/// |V| >= 3) and ringel_youngs applied to a clique-minor witness.
int genus_lower_bound(const Graph& g);

struct ParamBounds {
    int tw_lb = 0;
    int td_lb = 0;
    int genus_lb = 0;
    int hadwiger_lb = 0;
    ClusterFamily witness;  // clique-minor branch sets backing hadwiger_lb
    std::string tw_method, td_method, genus_method, h_method;
};

/// Witness-backed lower bounds for all four parameters: hadwiger via the
/// contraction heuristic, tw >= h - 1, td >= tw, genus via Euler/Ringel-Youngs.
ParamBounds evaluate_bounds(const Graph& g, int effort, std::uint64_t seed);

struct BoundFormulaInput {
    double n = 0;
    double p = 0;
    double delta = 1;
    double C = 6;
    double r = 1;    // concentration constant; bounds are reported in units of r
    double c = 1.2;
    double r_h = 1;  // constants of the piecewise Hadwiger rate
    double C_h = 4;
};

struct TheoremBound {
    double n2p = 0, L = 0, M = 0, m = 0, q = 0;
    bool clique_branch = false;  // delta > sqrt(n^2 p * log(n^2 p))
    // Rates for the contracted random minor G(m, q), or for K_floor(m) on the
    // clique branch. NaN marks a degenerate sub-formula (log of <= 1).
    double tw = 0, td = 0, genus = 0, hadwiger = 0;
    int htilde_branch = 0;  // 1: r_h*sqrt(m); 2: m/(2 sqrt(log_{1/(1-q)} mq)); 3: m/(2 sqrt(log2 m))
    // Closed-form per-parameter rates in terms of (n, p, delta).
    double cor_tw = 0, cor_td = 0, cor_genus = 0, cor_hadwiger = 0;
    int cor_hadwiger_branch = 0;  // 1: delta <= sqrt(n2p); 2: middle; 3: large delta
};

/// Pure arithmetic: L = 19200 C delta, M = (96 C delta)^2 / (n^2 p),
/// m = n^2 p / L, q = 1 - e^{-M}, plus the per-parameter closed forms.
/// Throws std::domain_error when n^2 p <= 1 or delta < 1.
TheoremBound theorem_bound(const BoundFormulaInput& in);

}  // namespace perturb
