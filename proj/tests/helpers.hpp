#pragma once

#include <initializer_list>
#include <random>

#include "apsp/core.hpp"
#include "apsp/oracle.hpp"

namespace apsp::testing {

inline WeightMatrix mat(std::initializer_list<std::initializer_list<Weight>> rows) {
    const int r = (int)rows.size();
    const int c = (int)rows.begin()->size();
    WeightMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (Weight v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

// Random digraph as a weight matrix: diagonal 0, each off-diagonal arc present
// with probability `density`, weights uniform in [lo, hi].
inline WeightMatrix random_digraph(std::mt19937_64& rng, int n, double density, Weight lo,
                                   Weight hi) {
    WeightMatrix d(n, n, kPlusInf);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<Weight> weight(lo, hi);
    for (int i = 0; i < n; ++i) {
        d(i, i) = 0;
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng) < density) d(i, j) = weight(rng);
    }
    return d;
}

// Negative-cycle-free digraph with weights in [lo, hi]. Rejection sampling is
// hopeless beyond tiny n once lo < 0, so edges are built as a nonnegative cost
// plus a random vertex-potential difference: every cycle telescopes back to a
// nonnegative sum while individual edges go negative. Requires hi >= -lo.
inline WeightMatrix random_digraph_ncf(std::mt19937_64& rng, int n, double density, Weight lo,
                                       Weight hi) {
    if (lo >= 0) return random_digraph(rng, n, density, lo, hi);
    if (hi < -lo) throw std::invalid_argument("random_digraph_ncf needs hi >= -lo");
    std::uniform_int_distribution<Weight> pot(0, -lo);
    std::vector<Weight> p(n);
    for (Weight& v : p) v = pot(rng);
    WeightMatrix d(n, n, kPlusInf);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        d(i, i) = 0;
        for (int j = 0; j < n; ++j) {
            if (i == j || coin(rng) >= density) continue;
            const Weight shift = p[i] - p[j];
            std::uniform_int_distribution<Weight> cost(0, hi - shift);
            d(i, j) = cost(rng) + shift;
        }
    }
    return d;
}

inline Graph graph_of(const WeightMatrix& d) {
    std::vector<Edge> edges;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && is_finite(d(i, j))) edges.push_back({i, j, d(i, j)});
    return make_graph(d.rows(), std::move(edges));
}

inline WeightMatrix chain(int n, Weight w = 1) {
    WeightMatrix d(n, n, kPlusInf);
    for (int i = 0; i < n; ++i) d(i, i) = 0;
    for (int i = 0; i + 1 < n; ++i) d(i, i + 1) = w;
    return d;
}

}  // namespace apsp::testing
