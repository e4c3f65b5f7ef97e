#pragma once

#include <cstdint>

#include "apsp/apsp_exact.hpp"
#include "apsp/core.hpp"

namespace apsp {

// (1+eps)-stretch distances by adaptive scaling: every rounding is upward, so
// estimates never drop below the truth.

// Smallest power of two >= 4*ceil(log2 n)/ln(1+eps), at least 4.
Weight choose_resolution(int n, double epsilon);

// a'_ij = ceil(R*a_ij/M) when 0 <= a_ij <= m_bound, +inf otherwise.
WeightMatrix scale_matrix(const WeightMatrix& a, Weight m_bound, Weight r_resolution);

struct ApproxProdOutput {
    WeightMatrix product;
    WitnessMatrix witnesses;   // inner index achieving the final min, 0 = +inf
    Mat<std::int32_t> levels;  // scale exponent r that produced each entry
};

// Entrywise within [c, (1+4/R)c] of the exact product of the m_bound-truncated
// inputs, where R = r_resolution (a power of two >= 4).
WeightMatrix approx_dist_prod(const WeightMatrix& a, const WeightMatrix& b, Weight m_bound,
                              Weight r_resolution);

// Same, with the (level, witness) pair achieving each final min.
ApproxProdOutput approx_dist_prod_w(const WeightMatrix& a, const WeightMatrix& b,
                                    Weight m_bound, Weight r_resolution,
                                    Kernel force = Kernel::Auto);

// ceil(log2 n) approximate self-squarings at resolution choose_resolution.
// Distances satisfy delta <= f <= (1+eps)*delta; witnesses reconstruct real
// paths no heavier than the estimates.
ApspResult approx_short_path(const WeightMatrix& d, double epsilon,
                             const SolverConfig& cfg = {});

}  // namespace apsp
