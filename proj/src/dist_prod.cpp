#include "apsp/dist_prod.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>

namespace apsp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest encoded-value bit width we are willing to cover with primes.
constexpr std::size_t kMaxBasisBits = 1 << 18;
constexpr std::size_t kMaxBasisPrimes = 4096;

u64 mod_mul(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 mod_pow(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mod_mul(r, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                  37ull}) {
        u64 x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Ascending 31-bit primes, extended on demand.
const std::vector<u64>& prime_table(std::size_t need) {
    static std::vector<u64> primes;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    u64 candidate = primes.empty() ? (u64{1} << 30) + 1 : primes.back() + 2;
    while (primes.size() < need && primes.size() < kMaxBasisPrimes) {
        if (is_prime_u64(candidate)) primes.push_back(candidate);
        candidate += 2;
    }
    return primes;
}

void check_conform(const WeightMatrix& a, const WeightMatrix& b) {
    if (a.cols() != b.rows())
        throw ContractError("distance product dimension mismatch");
}

bool in_cap(Weight w, Weight cap) { return is_finite(w) && w <= cap && w >= -cap; }

Weight floor_div(Weight a, Weight b) {
    Weight q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

struct Calibration {
    double minplus_ns;  // one naive min-plus inner step
    double modmul_ns;   // one modular multiply-accumulate
};

const Calibration& calibration() {
    static Calibration c = [] {
        using clock = std::chrono::steady_clock;
        constexpr int reps = 1 << 20;
        volatile std::int64_t sink = 0;

        std::vector<Weight> xs(1024), ys(1024);
        std::mt19937_64 rng(7);
        for (auto& x : xs) x = (Weight)(rng() % 1000) - 500;
        for (auto& y : ys) y = (Weight)(rng() % 1000) - 500;

        auto t0 = clock::now();
        Weight best = kPlusInf;
        for (int r = 0; r < reps; ++r) {
            Weight s = xs[r & 1023] + ys[(r * 7) & 1023];
            if (s < best) best = s;
        }
        sink = best;
        auto t1 = clock::now();

        u64 p = (u64{1} << 30) + 35;  // any odd modulus of the right size
        u64 acc = 1;
        for (int r = 0; r < reps; ++r) acc = mod_mul(acc, acc + (u64)r, p);
        sink = (std::int64_t)acc;
        auto t2 = clock::now();
        (void)sink;

        auto ns = [](auto d) {
            return std::chrono::duration<double, std::nano>(d).count();
        };
        Calibration out;
        out.minplus_ns = std::max(0.1, ns(t1 - t0) / reps);
        out.modmul_ns = std::max(0.1, ns(t2 - t1) / reps);
        return out;
    }();
    return c;
}

}  // namespace

DistProdOutput naive_dist_prod(const WeightMatrix& a, const WeightMatrix& b, Weight cap) {
    check_conform(a, b);
    if (cap < 0) throw ContractError("negative cap");
    const int n = a.rows(), m = a.cols(), q = b.cols();
    DistProdOutput out{WeightMatrix(n, q, kPlusInf), WitnessMatrix(n, q, 0)};

    // Per-row-of-b column lists keep sparse iterations cheap.
    std::vector<std::vector<int>> cols_of(m);
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < q; ++j)
            if (in_cap(b(k, j), cap)) cols_of[k].push_back(j);

    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m; ++k) {
            Weight aik = a(i, k);
            if (!in_cap(aik, cap)) continue;
            for (int j : cols_of[k]) {
                Weight cand = aik + b(k, j);
                if (cand < out.product(i, j)) {
                    out.product(i, j) = cand;
                    out.witnesses(i, j) = k + 1;  // ascending k, so smallest wins
                }
            }
        }
    }
    return out;
}

WeightMatrix naive_dist_prod_value(const WeightMatrix& a, const WeightMatrix& b, Weight cap) {
    check_conform(a, b);
    if (cap < 0) throw ContractError("negative cap");
    const int n = a.rows(), m = a.cols(), q = b.cols();
    WeightMatrix c(n, q, kPlusInf);
    std::vector<std::vector<int>> cols_of(m);
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < q; ++j)
            if (in_cap(b(k, j), cap)) cols_of[k].push_back(j);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) {
            Weight aik = a(i, k);
            if (!in_cap(aik, cap)) continue;
            for (int j : cols_of[k]) {
                Weight cand = aik + b(k, j);
                if (cand < c(i, j)) c(i, j) = cand;
            }
        }
    return c;
}

PrimeBasis build_prime_basis(int m, Weight cap) {
    if (m < 1 || cap < 0) throw ContractError("prime basis needs m >= 1 and cap >= 0");
    // Bound on any encoded entry: m * (m+1)^(2M).
    double bits_needed = std::log2((double)m) + 2.0 * (double)cap * std::log2((double)m + 1) + 2;
    if (bits_needed > (double)kMaxBasisBits)
        throw ConfigError("encoded-product modulus out of reach; use the naive kernel");

    BigNat bound(1);
    for (Weight e = 0; e < 2 * cap; ++e) bound.mul_small((u64)m + 1);
    bound.mul_small((u64)m);

    PrimeBasis basis;
    basis.modulus = BigNat(1);
    std::size_t next = 0;
    while (basis.modulus.compare(bound) <= 0) {
        const auto& table = prime_table(next + 1);
        if (next >= table.size())
            throw ConfigError("prime table exhausted; use the naive kernel");
        basis.primes.push_back(table[next]);
        basis.modulus.mul_small(table[next]);
        ++next;
    }
    return basis;
}

WeightMatrix encoded_dist_prod(const WeightMatrix& a, const WeightMatrix& b, Weight cap) {
    check_conform(a, b);
    if (cap < 0) throw ContractError("negative cap");
    const int n = a.rows(), m = a.cols(), q = b.cols();
    if (m == 0) return WeightMatrix(n, q, kPlusInf);
    const Weight M = cap;
    // Addends range over [-M, M], so term exponents (M-a)+(M-b) reach 4M; the
    // basis must cover m * (m+1)^(4M).
    PrimeBasis basis = build_prime_basis(m, 2 * M);
    const int np = (int)basis.primes.size();
    const u64 base = (u64)m + 1;
    const Weight emax = 4 * M;

    // Residue products, one pass per prime.
    std::vector<Mat<u64>> residues;
    residues.reserve(np);
    for (int pi = 0; pi < np; ++pi) {
        const u64 p = basis.primes[pi];
        std::vector<u64> pow(emax + 1);
        pow[0] = 1 % p;
        for (Weight e = 1; e <= emax; ++e) pow[e] = mod_mul(pow[e - 1], base % p, p);

        Mat<u64> ae(n, m), be(m, q);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k)
                ae(i, k) = in_cap(a(i, k), M) ? pow[M - a(i, k)] : 0;
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < q; ++j)
                be(k, j) = in_cap(b(k, j), M) ? pow[M - b(k, j)] : 0;

        Mat<u64> cp(n, q, 0);
        std::vector<u128> acc(q);
        for (int i = 0; i < n; ++i) {
            std::fill(acc.begin(), acc.end(), (u128)0);
            for (int k = 0; k < m; ++k) {
                u64 av = ae(i, k);
                if (!av) continue;
                for (int j = 0; j < q; ++j) acc[j] += (u128)av * be(k, j);
            }
            for (int j = 0; j < q; ++j) cp(i, j) = (u64)(acc[j] % p);
        }
        residues.push_back(std::move(cp));
    }

    // Garner reconstruction setup.
    std::vector<BigNat> prefix(np);  // prefix[k] = p_0 * ... * p_{k-1}
    std::vector<u64> inv(np, 0);
    BigNat running(1);
    for (int k = 0; k < np; ++k) {
        prefix[k] = running;
        if (k > 0) {
            u64 p = basis.primes[k];
            inv[k] = mod_pow(running.mod_small(p), p - 2, p);
        }
        running.mul_small(basis.primes[k]);
    }

    // Powers of (m+1) for the exponent search.
    std::vector<BigNat> powers(emax + 2);
    powers[0] = BigNat(1);
    for (Weight e = 1; e <= emax + 1; ++e) {
        powers[e] = powers[e - 1];
        powers[e].mul_small(base);
    }

    WeightMatrix c(n, q, kPlusInf);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < q; ++j) {
            BigNat x((u64)residues[0](i, j));
            for (int k = 1; k < np; ++k) {
                u64 p = basis.primes[k];
                u64 cur = x.mod_small(p);
                u64 r = residues[k](i, j);
                u64 t = mod_mul((r + p - cur) % p, inv[k], p);
                x.add_mul_small(prefix[k], t);
            }
            if (x.is_zero()) continue;  // every index excluded, entry stays +inf
            // Largest e with (m+1)^e <= x, by binary search.
            Weight lo = 0, hi = emax;
            while (lo < hi) {
                Weight mid = (lo + hi + 1) / 2;
                if (powers[mid].compare(x) <= 0)
                    lo = mid;
                else
                    hi = mid - 1;
            }
            c(i, j) = 2 * M - lo;
        }
    return c;
}

DistProdOutput smallest_witness_product(const WeightMatrix& a, const WeightMatrix& b,
                                        Weight cap) {
    check_conform(a, b);
    const int n = a.rows(), m = a.cols(), q = b.cols();
    if (m == 0) return {WeightMatrix(n, q, kPlusInf), WitnessMatrix(n, q, 0)};
    Weight amax = 0;
    for (Weight w : a.data())
        if (in_cap(w, cap)) amax = std::max(amax, w < 0 ? -w : w);
    for (Weight w : b.data())
        if (in_cap(w, cap)) amax = std::max(amax, w < 0 ? -w : w);
    if ((u128)2 * m * (u128)amax + m > (u128)kMaxFinite)
        throw OverflowError("scaled witness entries exceed the finite range");

    // a' = m*a + (k-1), b' = m*b; the cap is applied to the original values.
    WeightMatrix as(n, m), bs(m, q);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k)
            as(i, k) = in_cap(a(i, k), cap) ? (Weight)m * a(i, k) + k : kPlusInf;
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < q; ++j)
            bs(k, j) = in_cap(b(k, j), cap) ? (Weight)m * b(k, j) : kPlusInf;

    WeightMatrix cs = naive_dist_prod_value(as, bs, kMaxFinite);
    DistProdOutput out{WeightMatrix(n, q, kPlusInf), WitnessMatrix(n, q, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < q; ++j) {
            Weight v = cs(i, j);
            if (!is_finite(v)) continue;
            out.product(i, j) = floor_div(v, m);
            out.witnesses(i, j) = (std::int32_t)(v - floor_div(v, m) * m) + 1;
        }
    return out;
}

bool witness_valid(const WeightMatrix& a, const WeightMatrix& b, Weight cap,
                   const WeightMatrix& c, int i, int j, std::int32_t w) {
    if (!is_finite(c(i, j))) return w == 0;
    if (w < 1 || w > a.cols()) return false;
    return add_capped(a(i, w - 1), b(w - 1, j), cap) == c(i, j);
}

WitnessMatrix witnesses_by_bits(const WeightMatrix& a, const WeightMatrix& b, Weight cap,
                                const WeightMatrix& c) {
    const int n = a.rows(), m = a.cols(), q = b.cols();
    WitnessMatrix cand(n, q, 0);
    if (m == 0) return cand;
    int nbits = 0;
    while ((1 << nbits) <= m) ++nbits;  // ceil(log2 m) + 1 bit positions

    for (int bit = 0; bit < nbits; ++bit) {
        std::vector<int> idx;  // 0-based inner indices whose 1-based value has this bit
        for (int k = 0; k < m; ++k)
            if ((k + 1) >> bit & 1) idx.push_back(k);
        if (idx.empty()) continue;
        Selector sel = Selector::of(idx, m);
        WeightMatrix cl = naive_dist_prod_value(select(a, Selector::all(n), sel),
                                                select(b, sel, Selector::all(q)), cap);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < q; ++j)
                if (is_finite(c(i, j)) && cl(i, j) == c(i, j))
                    cand(i, j) |= std::int32_t{1} << bit;
    }
    return cand;
}

WitnessMatrix witnesses_by_sampling(const WeightMatrix& a, const WeightMatrix& b, Weight cap,
                                    const WeightMatrix& c, int confidence_constant,
                                    std::uint64_t seed) {
    const int n = a.rows(), m = a.cols(), q = b.cols();
    WitnessMatrix out(n, q, 0);
    if (m == 0) return out;

    std::vector<std::pair<int, int>> open;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < q; ++j)
            if (is_finite(c(i, j))) open.emplace_back(i, j);

    auto try_candidates = [&](const WitnessMatrix& cand, const std::vector<int>* map) {
        std::erase_if(open, [&](const std::pair<int, int>& ij) {
            auto [i, j] = ij;
            std::int32_t w = cand(i, j);
            if (map) {
                if (w < 1 || w > (int)map->size()) return false;
                w = (std::int32_t)(*map)[w - 1] + 1;
            }
            if (witness_valid(a, b, cap, c, i, j, w)) {
                out(i, j) = w;
                return true;
            }
            return false;
        });
    };

    // Unique witnesses first: one bit-set pass over the full product.
    try_candidates(witnesses_by_bits(a, b, cap, c), nullptr);

    std::mt19937_64 rng(seed);
    int logn = 1;
    while ((1 << logn) < std::max(n, 2)) ++logn;
    const int reps = std::max(1, confidence_constant) * logn;

    for (int r = 1; (1 << r) <= m && !open.empty(); ++r) {
        const int size = (m + (1 << r) - 1) >> r;
        for (int t = 0; t < reps && !open.empty(); ++t) {
            std::vector<int> pool(m);
            std::iota(pool.begin(), pool.end(), 0);
            for (int x = 0; x < size; ++x)
                std::swap(pool[x], pool[x + (int)(rng() % (m - x))]);
            std::vector<int> subset(pool.begin(), pool.begin() + size);
            std::sort(subset.begin(), subset.end());
            Selector sel = Selector::of(subset, m);
            WeightMatrix ar = select(a, Selector::all(n), sel);
            WeightMatrix br = select(b, sel, Selector::all(q));
            WeightMatrix cr = naive_dist_prod_value(ar, br, cap);
            WitnessMatrix cand = witnesses_by_bits(ar, br, cap, cr);
            // Candidates only count where the restricted product matched.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < q; ++j)
                    if (cr(i, j) != c(i, j)) cand(i, j) = 0;
            try_candidates(cand, &subset);
        }
    }

    // Whp never reached; guarantees termination regardless.
    for (auto [i, j] : open)
        for (int k = 0; k < m; ++k)
            if (add_capped(a(i, k), b(k, j), cap) == c(i, j)) {
                out(i, j) = k + 1;
                break;
            }
    return out;
}

Kernel dispatch_choice(int n_rows, int m_inner, int n_cols, Weight cap) {
    if (m_inner == 0 || cap < 0 || !is_finite(cap)) return Kernel::Naive;
    double bits = std::log2((double)m_inner + 1) * 4.0 * (double)cap +
                  std::log2((double)m_inner + 2) + 2;
    if (bits > (double)kMaxBasisBits) return Kernel::Naive;
    double nprimes = std::ceil(bits / 30.0);
    const Calibration& cal = calibration();
    double cells = (double)n_rows * n_cols;
    double inner = cells * m_inner;
    double naive_cost = inner * cal.minplus_ns;
    double decode = cells * (nprimes * nprimes + nprimes * std::log2(2.0 * cap + 2));
    double encoded_cost = (nprimes * inner + decode) * cal.modmul_ns;
    return encoded_cost < naive_cost ? Kernel::Encoded : Kernel::Naive;
}

DistProdOutput dist_prod(const WeightMatrix& a, const WeightMatrix& b, Weight cap,
                         WitnessMode mode, std::uint64_t seed, Kernel force,
                         int confidence_constant) {
    check_conform(a, b);
    if (mode == WitnessMode::ExactSmallest) return smallest_witness_product(a, b, cap);

    Kernel kernel = force == Kernel::Auto
                        ? dispatch_choice(a.rows(), a.cols(), b.cols(), cap)
                        : force;
    if (kernel == Kernel::Naive && mode == WitnessMode::Auto) return naive_dist_prod(a, b, cap);

    WeightMatrix c = kernel == Kernel::Encoded ? encoded_dist_prod(a, b, cap)
                                               : naive_dist_prod_value(a, b, cap);
    WitnessMatrix w = witnesses_by_sampling(a, b, cap, c, confidence_constant, seed);
    return {std::move(c), std::move(w)};
}

}  // namespace apsp
