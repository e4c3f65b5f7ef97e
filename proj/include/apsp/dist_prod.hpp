#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apsp/bignat.hpp"
#include "apsp/core.hpp"

namespace apsp {

// Capped min-plus products over extended integer matrices, with witnesses.
//
// All products share one contract: c(i,j) = min over k of a(i,k) + b(k,j),
// restricted to addends of absolute value at most `cap`; an empty min is
// +inf with witness 0. Witness entry k (1-based into the inner dimension)
// certifies c(i,j) = a(i,k-1) + b(k-1,j).

struct DistProdOutput {
    WeightMatrix product;
    WitnessMatrix witnesses;
};

enum class Kernel { Auto, Naive, Encoded };

enum class WitnessMode {
    Auto,           // smallest from the naive kernel, sampled after the encoded one
    ExactSmallest,  // witnesses as produced by smallest_witness_product
    Sampled,        // any validating witness, seed-deterministic
};

// Cubic kernel. Witnesses are the smallest index attaining each minimum.
DistProdOutput naive_dist_prod(const WeightMatrix& a, const WeightMatrix& b, Weight cap);

// Product only, same values as naive_dist_prod(a, b, cap).product.
WeightMatrix naive_dist_prod_value(const WeightMatrix& a, const WeightMatrix& b, Weight cap);

// Distinct primes below 2^31 whose product exceeds every possible encoded
// entry value m * (m+1)^(2M).
struct PrimeBasis {
    std::vector<std::uint64_t> primes;
    BigNat modulus;
};

PrimeBasis build_prime_basis(int m, Weight cap);

// Min-plus product through the (m+1)^(M - a) encoding: per-prime standard
// integer products, residue reconstruction, then exponent extraction by
// binary search. Produces no witnesses.
WeightMatrix encoded_dist_prod(const WeightMatrix& a, const WeightMatrix& b, Weight cap);

// Exact smallest witnesses via the scaled product a' = m*a + (k-1), b' = m*b.
DistProdOutput smallest_witness_product(const WeightMatrix& a, const WeightMatrix& b,
                                        Weight cap);

// Witness candidates from the bit-set technique: one restricted product per
// bit position of the inner index. Entries with a unique witness come back
// correct; others carry a candidate the caller must validate.
WitnessMatrix witnesses_by_bits(const WeightMatrix& a, const WeightMatrix& b, Weight cap,
                                const WeightMatrix& c);

// True iff witness w (1-based, or 0 for a +inf entry) certifies c(i,j).
bool witness_valid(const WeightMatrix& a, const WeightMatrix& b, Weight cap,
                   const WeightMatrix& c, int i, int j, std::int32_t w);

// Complete, validated witness matrix: bit-set candidates over random index
// subsets at every scale, then a per-entry linear scan for stragglers.
WitnessMatrix witnesses_by_sampling(const WeightMatrix& a, const WeightMatrix& b, Weight cap,
                                    const WeightMatrix& c, int confidence_constant,
                                    std::uint64_t seed);

// Kernel dispatch through a per-build calibrated cost model, plus witness
// production per `mode`.
DistProdOutput dist_prod(const WeightMatrix& a, const WeightMatrix& b, Weight cap,
                         WitnessMode mode = WitnessMode::Auto, std::uint64_t seed = 0,
                         Kernel force = Kernel::Auto, int confidence_constant = 3);

// Kernel the dispatcher would pick for these shapes and cap.
Kernel dispatch_choice(int n_rows, int m_inner, int n_cols, Weight cap);

}  // namespace apsp
