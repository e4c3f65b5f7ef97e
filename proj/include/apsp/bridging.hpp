#pragma once

#include <cstdint>
#include <vector>

#include "apsp/core.hpp"

namespace apsp {

// s-bridging sets: for every pair with eta(i,j) >= s some k in B lies on a
// shortest i->j path. Built by random sampling or by greedy hitting sets over
// witness-guided path walks.

struct BridgingSet {
    std::vector<int> vertices;  // strictly increasing, 0-based
    double s = 1.0;

    bool contains(int v) const;
};

// Stamp bookkeeping shared by every operation that improves a distance entry.
// Each assignment draws the next value from a solver-wide counter, so stamps
// strictly increase in update order.
struct StampCtx {
    StampMatrix* stamps = nullptr;
    std::int64_t* counter = nullptr;

    void mark(int i, int j) {
        if (stamps) (*stamps)(i, j) = ++*counter;
    }
};

// Each vertex kept independently with probability min(1, 9 ln n / s).
BridgingSet rand_bridging_set(int n, double s, std::uint64_t seed);

// Intermediate vertices of the witness-traced i->j path, at most `budget` of
// them. Returns the empty set when the pair has no witness or budget <= 0.
std::vector<int> sub_path(const WitnessMatrix& w, int i, int j, int budget);

// Greedy hitting set: repeatedly take the element covering the most unhit
// sets, ties to the smallest index. Throws on an empty member set.
BridgingSet hitting_set(const std::vector<std::vector<int>>& collection, int n);

// Collects U(i,j) = sub_path(w, i, j, s-1) + {i, j} over all pairs and hits
// every U with |U| >= s.
BridgingSet find_bridge(const WitnessMatrix& w, int s);

// Walks like sub_path but also relaxes f and w so that every returned vertex
// k satisfies f(a,k) + f(k,b) <= f(a,b) afterwards.
std::vector<int> sub_path_upd(WeightMatrix& f, WitnessMatrix& w, int a, int b, int i, int j,
                              int budget, StampCtx ctx = {});

// find_bridge over relaxing walks. When a successor matrix is supplied the
// walks follow it instead of the witness recursion (simple traces even with
// zero-weight cycles); `d` must then hold the direct edge weights.
BridgingSet find_bridge_upd(WeightMatrix& f, WitnessMatrix& w, int s, StampCtx ctx = {},
                            const SuccessorMatrix* succ = nullptr,
                            const WeightMatrix* d = nullptr);

}  // namespace apsp
