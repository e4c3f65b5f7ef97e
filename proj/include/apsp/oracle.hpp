#pragma once

#include <utility>
#include <vector>

#include "apsp/bridging.hpp"
#include "apsp/core.hpp"

namespace apsp {

// Reference implementations kept deliberately naive and separate from the
// optimized kernels, so agreement between the two is meaningful evidence.

struct OracleResult {
    WeightMatrix distances;
    Mat<std::int32_t> eta;  // min edge count among weight-optimal paths; -1 = no path
    bool has_negative_cycle = false;
};

OracleResult floyd_warshall(const WeightMatrix& d);

OracleResult bellman_ford_all(const Graph& g);

// eta(i,j): smallest L with min-weight-over-(<=L)-edge-walks(i,j) = delta(i,j).
Mat<std::int32_t> min_edge_counts(const WeightMatrix& d, const WeightMatrix& delta);

struct BridgingReport {
    bool ok = true;
    std::vector<std::pair<int, int>> violations;
};

// Every pair with eta >= s must route a shortest path through some k in B.
BridgingReport check_bridging(const BridgingSet& b, const OracleResult& oracle, double s);

// Additionally the edge counts must decompose: eta(i,j) = eta(i,k) + eta(k,j).
BridgingReport check_strong_bridging(const BridgingSet& b, const OracleResult& oracle,
                                     double s);

}  // namespace apsp
