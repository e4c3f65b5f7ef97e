#include "apsp/oracle.hpp"

namespace apsp {

namespace {

// Min-plus sum treating +inf as absorbing. Saturates toward -inf instead of
// throwing: under a negative cycle the relaxations compound exponentially, and
// the only consumer of those values is the cycle flag itself.
Weight relax_sum(Weight a, Weight b) {
    if (!is_finite(a) || !is_finite(b)) return kPlusInf;
    Weight s;
    if (__builtin_add_overflow(a, b, &s) || s < -kMaxFinite) return -kMaxFinite;
    return s;
}

}  // namespace

OracleResult floyd_warshall(const WeightMatrix& d) {
    if (d.rows() != d.cols()) throw ContractError("floyd_warshall: square input required");
    const int n = d.rows();
    WeightMatrix dist = d;
    for (int i = 0; i < n; ++i) dist(i, i) = std::min<Weight>(dist(i, i), 0);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!is_finite(dist(i, k))) continue;
            for (int j = 0; j < n; ++j) {
                Weight via = relax_sum(dist(i, k), dist(k, j));
                if (via < dist(i, j)) dist(i, j) = via;
            }
        }
    OracleResult r;
    r.has_negative_cycle = false;
    for (int i = 0; i < n; ++i)
        if (dist(i, i) < 0) r.has_negative_cycle = true;
    if (!r.has_negative_cycle) r.eta = min_edge_counts(d, dist);
    r.distances = std::move(dist);
    return r;
}

OracleResult bellman_ford_all(const Graph& g) {
    const int n = g.n;
    OracleResult r;
    r.distances = WeightMatrix(n, n, kPlusInf);
    r.has_negative_cycle = false;
    for (int src = 0; src < n; ++src) {
        std::vector<Weight> dist(n, kPlusInf);
        dist[src] = 0;
        for (int round = 0; round < n - 1; ++round) {
            bool changed = false;
            for (const Edge& e : g.edges) {
                Weight via = relax_sum(dist[e.from], e.weight);
                if (via < dist[e.to]) {
                    dist[e.to] = via;
                    changed = true;
                }
            }
            if (!changed) break;
        }
        for (const Edge& e : g.edges)
            if (relax_sum(dist[e.from], e.weight) < dist[e.to]) r.has_negative_cycle = true;
        for (int j = 0; j < n; ++j) r.distances(src, j) = dist[j];
    }
    if (!r.has_negative_cycle) r.eta = min_edge_counts(to_weight_matrix(g), r.distances);
    return r;
}

Mat<std::int32_t> min_edge_counts(const WeightMatrix& d, const WeightMatrix& delta) {
    const int n = d.rows();
    Mat<std::int32_t> eta(n, n, -1);
    WeightMatrix best(n, n, kPlusInf);
    for (int i = 0; i < n; ++i) {
        best(i, i) = 0;
        if (delta(i, i) == 0) eta(i, i) = 0;
    }
    for (int len = 1; len < n; ++len) {
        WeightMatrix next = best;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!is_finite(best(i, k))) continue;
                for (int j = 0; j < n; ++j) {
                    if (k == j || !is_finite(d(k, j))) continue;
                    Weight via = checked_add(best(i, k), d(k, j));
                    if (via < next(i, j)) next(i, j) = via;
                }
            }
        best = std::move(next);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (eta(i, j) < 0 && is_finite(delta(i, j)) && best(i, j) == delta(i, j))
                    eta(i, j) = len;
    }
    return eta;
}

namespace {

BridgingReport check_bridging_impl(const BridgingSet& b, const OracleResult& oracle, double s,
                                   bool strong) {
    const int n = oracle.distances.rows();
    BridgingReport report;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (oracle.eta(i, j) < 0 || (double)oracle.eta(i, j) < s) continue;
            bool bridged = false;
            for (int k : b.vertices) {
                if (!is_finite(oracle.distances(i, k)) || !is_finite(oracle.distances(k, j)))
                    continue;
                if (oracle.distances(i, k) + oracle.distances(k, j) !=
                    oracle.distances(i, j))
                    continue;
                if (strong && oracle.eta(i, k) + oracle.eta(k, j) != oracle.eta(i, j))
                    continue;
                bridged = true;
                break;
            }
            if (!bridged) {
                report.ok = false;
                report.violations.push_back({i, j});
            }
        }
    return report;
}

}  // namespace

BridgingReport check_bridging(const BridgingSet& b, const OracleResult& oracle, double s) {
    return check_bridging_impl(b, oracle, s, false);
}

BridgingReport check_strong_bridging(const BridgingSet& b, const OracleResult& oracle,
                                     double s) {
    return check_bridging_impl(b, oracle, s, true);
}

}  // namespace apsp
