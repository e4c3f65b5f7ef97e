#include "apsp/apsp_approx.hpp"

#include <cmath>

namespace apsp {

namespace {

int ceil_log2(Weight v) {
    int e = 0;
    while ((Weight{1} << e) < v) ++e;
    return e;
}

void require_nonnegative(const WeightMatrix& a, const char* who) {
    for (Weight v : a.data())
        if (v < 0) throw ContractError(std::string(who) + ": negative entry");
}

}  // namespace

Weight choose_resolution(int n, double epsilon) {
    if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");
    const int levels = n > 1 ? ceil_log2(n) : 0;
    const double wanted = 4.0 * levels / std::log1p(epsilon);
    Weight r = 4;
    while ((double)r < wanted) r <<= 1;
    return r;
}

WeightMatrix scale_matrix(const WeightMatrix& a, Weight m_bound, Weight r_resolution) {
    require_nonnegative(a, "scale_matrix");
    WeightMatrix out(a.rows(), a.cols());
    for (std::size_t idx = 0; idx < a.data().size(); ++idx) {
        const Weight v = a.data()[idx];
        if (v > m_bound || !is_finite(v)) {
            out.data()[idx] = kPlusInf;
        } else {
            const unsigned __int128 num = (unsigned __int128)r_resolution * (unsigned __int128)v;
            out.data()[idx] = (Weight)((num + m_bound - 1) / m_bound);
        }
    }
    return out;
}

ApproxProdOutput approx_dist_prod_w(const WeightMatrix& a, const WeightMatrix& b,
                                    Weight m_bound, Weight r_resolution, Kernel force) {
    if (r_resolution < 4 || (r_resolution & (r_resolution - 1)) != 0)
        throw ConfigError("resolution must be a power of two >= 4");
    require_nonnegative(a, "approx_dist_prod");
    require_nonnegative(b, "approx_dist_prod");
    if (m_bound < 1) m_bound = 1;

    // A level's scale bound 2^r can exceed m_bound (whenever R > m_bound);
    // entries above m_bound must stay excluded regardless of the level.
    auto truncate = [m_bound](WeightMatrix m) {
        for (Weight& v : m.data())
            if (v > m_bound) v = kPlusInf;
        return m;
    };
    const WeightMatrix at = truncate(a);
    const WeightMatrix bt = truncate(b);

    const int lo = ceil_log2(r_resolution);
    const int hi = std::max(lo, ceil_log2(m_bound));
    ApproxProdOutput acc{WeightMatrix(a.rows(), b.cols(), kPlusInf),
                         WitnessMatrix(a.rows(), b.cols(), 0),
                         Mat<std::int32_t>(a.rows(), b.cols(), 0)};
    for (int r = lo; r <= hi; ++r) {
        const Weight bound = Weight{1} << r;
        WeightMatrix as = scale_matrix(at, bound, r_resolution);
        WeightMatrix bs = scale_matrix(bt, bound, r_resolution);
        DistProdOutput out = dist_prod(as, bs, r_resolution, WitnessMode::Auto,
                                       0x5ca1edULL + (std::uint64_t)r, force);
        const int shift = r - lo;
        for (int i = 0; i < acc.product.rows(); ++i)
            for (int j = 0; j < acc.product.cols(); ++j) {
                const Weight c = out.product(i, j);
                if (!is_finite(c) || c > (kMaxFinite >> shift)) continue;
                const Weight v = c << shift;
                if (v < acc.product(i, j)) {
                    acc.product(i, j) = v;
                    acc.witnesses(i, j) = out.witnesses(i, j);
                    acc.levels(i, j) = r;
                }
            }
    }
    return acc;
}

WeightMatrix approx_dist_prod(const WeightMatrix& a, const WeightMatrix& b, Weight m_bound,
                              Weight r_resolution) {
    return approx_dist_prod_w(a, b, m_bound, r_resolution).product;
}

ApspResult approx_short_path(const WeightMatrix& d, double epsilon, const SolverConfig& cfg) {
    if (d.rows() != d.cols()) throw ContractError("solver input must be square");
    require_nonnegative(d, "approx_short_path");
    const int n = d.rows();
    const Weight r_resolution = choose_resolution(n, epsilon);

    ApspResult res{d, WitnessMatrix(n, n, 0), StampMatrix(n, n, 0), std::nullopt, {}};
    if (n <= 1) return res;

    const Weight m = max_abs_weight(d);
    if (m > kMaxFinite / (4 * (Weight)n)) throw OverflowError("weights too large to scale");
    const Weight m_bound = std::max<Weight>(1, m * n);

    std::int64_t counter = 0;
    const int levels = ceil_log2(n);
    for (int ell = 1; ell <= levels; ++ell) {
        ApproxProdOutput out =
            approx_dist_prod_w(res.distances, res.distances, m_bound, r_resolution,
                               cfg.force_kernel);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (out.product(i, j) < res.distances(i, j)) {
                    res.distances(i, j) = out.product(i, j);
                    res.witnesses(i, j) = out.witnesses(i, j);
                    res.stamps(i, j) = ++counter;
                }
    }
    return res;
}

}  // namespace apsp
