#include "perturb/random_source.hpp"

#include <cmath>

namespace perturb {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("edge probability must lie in [0, 1]");
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("sample_gnp: negative n");
    check_probability(p);

    std::vector<std::pair<int, int>> edges;
    if (n >= 2 && p > 0.0) {
        const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
        if (p >= 1.0) {
            edges.reserve(static_cast<size_t>(total));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        } else {
            Rng rng(seed);
            const double log_q = std::log1p(-p);
            std::int64_t pos = -1;
            int row = 0;                 // current u
            std::int64_t row_start = 0;  // linear index of pair (row, row+1)
            for (;;) {
                double skip = std::floor(std::log(rng.next_positive_unit()) / log_q);
                if (skip >= static_cast<double>(total - pos)) break;
                pos += 1 + static_cast<std::int64_t>(skip);
                if (pos >= total) break;
                while (pos >= row_start + (n - 1 - row)) {
                    row_start += n - 1 - row;
                    ++row;
                }
                edges.emplace_back(row, row + 1 + static_cast<int>(pos - row_start));
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::pair<double, double> two_round_split(double p) {
    check_probability(p);
    double half = 1.0 - std::sqrt(1.0 - p);
    return {half, half};
}

std::pair<Graph, Graph> sample_two_round(int n, double p, std::uint64_t seed) {
    auto [p1, p2] = two_round_split(p);
    Seed s(seed);
    Graph g1 = sample_gnp(n, p1, s.stream(1));
    Graph g2 = sample_gnp(n, p2, s.stream(2));
    return {std::move(g1), std::move(g2)};
}

}  // namespace perturb
