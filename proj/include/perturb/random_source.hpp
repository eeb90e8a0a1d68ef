#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "perturb/graph.hpp"

namespace perturb {

/// SplitMix64 finalizer; the documented mixing function behind all seed
/// derivation in this project.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Master seed with a fixed stream-derivation rule: stream i is the i-th
/// SplitMix64 output of the master value. Identical (master, i) always yields
/// the same stream seed.
struct Seed {
    std::uint64_t master = 0;

    Seed() = default;
    explicit Seed(std::uint64_t m) : master(m) {}

    std::uint64_t stream(std::uint64_t i) const {
        return splitmix64(master + i * 0x9E3779B97F4A7C15ULL);
    }
    Seed substream(std::uint64_t i) const { return Seed(stream(i)); }
};

/// Deterministic RNG: std::mt19937_64 (fully specified by the standard) with
/// an explicit uint64 -> [0,1) mapping so doubles are reproducible across
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1): top 53 bits of the next output.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log argument.
    double next_positive_unit() { return 1.0 - next_unit(); }

    /// Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
    std::uint64_t below(std::uint64_t bound);

    bool bernoulli(double p) { return next_unit() < p; }

private:
    std::mt19937_64 engine_;
};

void check_probability(double p);

/// G(n,p) sampler. Each of the C(n,2) vertex pairs is included independently
/// with probability p; pairs are visited in lexicographic order with geometric
/// jumps, so the expected cost is O(n + n^2 p).
Graph sample_gnp(int n, double p, std::uint64_t seed);

/// Symmetric split (p1, p2) with p1 = p2 = 1 - sqrt(1 - p), so that
/// (1 - p1)(1 - p2) = 1 - p and p1 >= p/2.
std::pair<double, double> two_round_split(double p);

/// Two independent samples G1 ~ G(n,p1), G2 ~ G(n,p2) from the symmetric
/// split; their union is distributed as G(n,p).
std::pair<Graph, Graph> sample_two_round(int n, double p, std::uint64_t seed);

}  // namespace perturb
