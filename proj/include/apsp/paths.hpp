#pragma once

#include "apsp/core.hpp"

namespace apsp {

struct PathTrace {
    std::vector<int> vertices;  // 0-based, i = front, j = back
    Weight total_weight = 0;

    int edge_count() const noexcept { return (int)vertices.size() - 1; }
};

// Recursive witness expansion. Returns a shortest path when w comes from a
// successful solver run; the path may revisit vertices if the graph has
// zero-weight cycles. An unreachable pair yields <i,j> with weight +inf.
// Throws ContractError when the recursion depth exceeds n^2 (malformed w).
PathTrace reconstruct_path(const WitnessMatrix& w, const WeightMatrix& d, int i, int j);

// Witness matrix + update stamps -> successor matrix whose greedy traces are
// simple shortest paths. `d` supplies the direct edges for the stamp-0 layer.
// In strict mode a walk that consults an unset successor entry throws; in
// lenient mode (used for mid-run rebuilds) the affected pair stays unset.
SuccessorMatrix wit_to_suc(const WitnessMatrix& w, const StampMatrix& stamps,
                           const WeightMatrix& d, bool strict = true);

// Greedy successor trace. i = j gives the empty path of weight 0. Throws
// ContractError when s(i,j) = 0 with i != j, or on a repeated vertex.
PathTrace trace_simple_path(const SuccessorMatrix& s, const WeightMatrix& d, int i, int j);

}  // namespace apsp
