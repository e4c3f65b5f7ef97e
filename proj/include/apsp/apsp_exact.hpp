#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apsp/bridging.hpp"
#include "apsp/core.hpp"
#include "apsp/dist_prod.hpp"

namespace apsp {

struct IterationStats {
    int iteration = 0;      // 1-based
    double s = 0.0;         // path-length scale for this iteration
    int bridge_size = 0;    // |B| used by the products
    Kernel kernel = Kernel::Naive;
    double seconds = 0.0;
};

struct ApspResult {
    WeightMatrix distances;
    WitnessMatrix witnesses;
    StampMatrix stamps;  // 0 = entry still holds the direct edge
    std::optional<std::vector<int>> negative_cycle;
    std::vector<IterationStats> iterations;
};

struct SolverConfig {
    std::uint64_t seed = 0x5eed'0000'0000'0001ULL;
    double bridging_threshold = 0.5;  // re-bridge only while s <= n^theta
    int witness_confidence = 3;
    Kernel force_kernel = Kernel::Auto;
};

// Per-iteration seed, a fixed documented mix so failures reproduce.
std::uint64_t iteration_seed(std::uint64_t seed, int iteration);

// Randomized solver: random bridging sets, exact whp on negative-cycle-free
// inputs.
ApspResult rand_short_path(const WeightMatrix& d, const SolverConfig& cfg = {});

// Deterministic solver for unweighted digraphs (finite entries: 0 diagonal,
// weight-1 edges elsewhere). Throws ContractError on weighted input.
ApspResult unwght_short_path(const WeightMatrix& d, const SolverConfig& cfg = {});

// Deterministic solver for weighted digraphs; handles zero-weight cycles and
// flags negative ones.
ApspResult short_path(const WeightMatrix& d, const SolverConfig& cfg = {});

// Capped rectangular product F[rows,inner] * F[inner,cols] min-merged into f
// with witnesses remapped through `inner` and stamps drawn from ctx.
void dist_prod_upd(WeightMatrix& f, WitnessMatrix& w, StampCtx ctx, const Selector& rows,
                   const Selector& inner, const Selector& cols, Weight cap,
                   WitnessMode mode = WitnessMode::Auto, std::uint64_t seed = 0,
                   Kernel force = Kernel::Auto, int confidence = 3);

// All vertices i with f_ii < 0, or nullopt if there are none.
std::optional<std::vector<int>> detect_negative_cycle(const ApspResult& r);

// Sets f_ij = -inf exactly when some flagged vertex is reachable from i and
// reaches j; no-op when nothing is flagged.
ApspResult propagate_neg_infinity(ApspResult r, const Graph& g);

}  // namespace apsp
