#include "apsp/apsp_exact.hpp"

#include <chrono>
#include <cmath>
#include <deque>

#include "apsp/paths.hpp"

namespace apsp {

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int iterations_base_3_2(int n) {
    int count = 0;
    double s = 1.0;
    while (s < n) {
        s *= 1.5;
        ++count;
    }
    return count;
}

int iterations_base_2(int n) {
    int count = 0;
    while ((1LL << count) < n) ++count;
    return count;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require_square(const WeightMatrix& d) {
    if (d.rows() != d.cols()) throw ContractError("solver input must be square");
}

bool has_negative_diagonal(const WeightMatrix& f) {
    for (int i = 0; i < f.rows(); ++i)
        if (f(i, i) < 0) return true;
    return false;
}

struct SolverState {
    WeightMatrix f;
    WitnessMatrix w;
    StampMatrix stamps;
    std::int64_t counter = 0;

    explicit SolverState(const WeightMatrix& d)
        : f(d), w(d.rows(), d.rows(), 0), stamps(d.rows(), d.rows(), 0) {}

    StampCtx ctx() { return {&stamps, &counter}; }

    ApspResult finish(std::vector<IterationStats> iterations) {
        ApspResult r{std::move(f), std::move(w), std::move(stamps), std::nullopt,
                     std::move(iterations)};
        r.negative_cycle = detect_negative_cycle(r);
        return r;
    }
};

}  // namespace

std::uint64_t iteration_seed(std::uint64_t seed, int iteration) {
    return splitmix64(seed ^ (std::uint64_t)iteration);
}

void dist_prod_upd(WeightMatrix& f, WitnessMatrix& w, StampCtx ctx, const Selector& rows,
                   const Selector& inner, const Selector& cols, Weight cap, WitnessMode mode,
                   std::uint64_t seed, Kernel force, int confidence) {
    if (rows.size() == 0 || inner.size() == 0 || cols.size() == 0) return;
    WeightMatrix a = select(f, rows, inner);
    WeightMatrix b = select(f, inner, cols);
    DistProdOutput out = dist_prod(a, b, cap, mode, seed, force, confidence);
    for (int i = 0; i < rows.size(); ++i) {
        const int gi = rows.indices[i];
        for (int j = 0; j < cols.size(); ++j) {
            const int gj = cols.indices[j];
            const Weight v = out.product(i, j);
            if (v < f(gi, gj)) {
                f(gi, gj) = v;
                w(gi, gj) = inner.indices[out.witnesses(i, j) - 1] + 1;
                ctx.mark(gi, gj);
            }
        }
    }
}

ApspResult rand_short_path(const WeightMatrix& d, const SolverConfig& cfg) {
    require_square(d);
    const int n = d.rows();
    SolverState st(d);
    const Weight m = max_abs_weight(d);
    const Selector all = Selector::all(n);
    std::vector<IterationStats> stats;

    const int iters = iterations_base_3_2(n);
    for (int ell = 1; ell <= iters; ++ell) {
        const double t0 = now_seconds();
        const double s = std::pow(1.5, ell);
        BridgingSet bset = rand_bridging_set(n, s, iteration_seed(cfg.seed, ell));
        const Weight cap = (Weight)std::ceil(s * (double)m);
        if (!bset.vertices.empty()) {
            Selector b = Selector::of(bset.vertices, n);
            dist_prod_upd(st.f, st.w, st.ctx(), all, b, all, cap, WitnessMode::Auto,
                          iteration_seed(cfg.seed, -ell), cfg.force_kernel,
                          cfg.witness_confidence);
        }
        Kernel k = cfg.force_kernel != Kernel::Auto
                       ? cfg.force_kernel
                       : dispatch_choice(n, (int)bset.vertices.size(), n, cap);
        stats.push_back({ell, s, (int)bset.vertices.size(), k, now_seconds() - t0});
    }
    return st.finish(std::move(stats));
}

ApspResult unwght_short_path(const WeightMatrix& d, const SolverConfig& cfg) {
    require_square(d);
    const int n = d.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Weight v = d(i, j);
            if (i == j ? v != 0 : (is_finite(v) && v != 1))
                throw ContractError("unwght_short_path: input is not unweighted");
        }

    SolverState st(d);
    const Weight m = max_abs_weight(d);
    const Selector all = Selector::all(n);
    const double threshold = std::pow((double)n, cfg.bridging_threshold);
    std::vector<IterationStats> stats;

    BridgingSet bset;
    bset.vertices = all.indices;
    const int iters = iterations_base_3_2(n);
    for (int ell = 1; ell <= iters; ++ell) {
        const double t0 = now_seconds();
        const double s = std::pow(1.5, ell);
        if (s <= threshold) bset = find_bridge(st.w, (int)std::floor(s / 3.0));
        const Weight cap = (Weight)std::ceil(s * (double)m);
        Selector b = Selector::of(bset.vertices, n);
        dist_prod_upd(st.f, st.w, st.ctx(), all, b, all, cap, WitnessMode::Auto,
                      iteration_seed(cfg.seed, -ell), cfg.force_kernel,
                      cfg.witness_confidence);
        Kernel k = cfg.force_kernel != Kernel::Auto
                       ? cfg.force_kernel
                       : dispatch_choice(n, b.size(), n, cap);
        stats.push_back({ell, s, b.size(), k, now_seconds() - t0});
    }
    return st.finish(std::move(stats));
}

ApspResult short_path(const WeightMatrix& d, const SolverConfig& cfg) {
    require_square(d);
    const int n = d.rows();
    SolverState st(d);
    const Weight m = max_abs_weight(d);
    const Selector all = Selector::all(n);
    const double threshold = std::pow((double)n, cfg.bridging_threshold);
    std::vector<IterationStats> stats;

    BridgingSet bset;
    bset.vertices = all.indices;
    SuccessorMatrix succ;
    bool have_succ = false;

    const int iters = iterations_base_2(n);
    for (int ell = 1; ell <= iters; ++ell) {
        const double t0 = now_seconds();
        const Weight s = Weight{1} << ell;
        if ((double)s <= threshold)
            bset = find_bridge_upd(st.f, st.w, (int)(s / 2), st.ctx(),
                                   have_succ ? &succ : nullptr, &d);
        Selector b = Selector::of(bset.vertices, n);
        dist_prod_upd(st.f, st.w, st.ctx(), b, all, all, s * m, WitnessMode::Auto,
                      iteration_seed(cfg.seed, ell), cfg.force_kernel,
                      cfg.witness_confidence);
        dist_prod_upd(st.f, st.w, st.ctx(), all, b, all, 2 * s * m, WitnessMode::Auto,
                      iteration_seed(cfg.seed, -ell), cfg.force_kernel,
                      cfg.witness_confidence);
        Kernel k = cfg.force_kernel != Kernel::Auto
                       ? cfg.force_kernel
                       : dispatch_choice(n, b.size(), n, 2 * s * m);
        stats.push_back({ell, (double)s, b.size(), k, now_seconds() - t0});

        if (has_negative_diagonal(st.f)) break;  // distances are diverging

        // Zero-weight-cycle fix: walks in the next find_bridge_upd follow the
        // successor structure, which stays simple even through zero cycles.
        succ = wit_to_suc(st.w, st.stamps, d, /*strict=*/false);
        have_succ = true;
    }
    return st.finish(std::move(stats));
}

std::optional<std::vector<int>> detect_negative_cycle(const ApspResult& r) {
    std::vector<int> flagged;
    for (int i = 0; i < r.distances.rows(); ++i)
        if (r.distances(i, i) < 0) flagged.push_back(i);
    if (flagged.empty()) return std::nullopt;
    return flagged;
}

ApspResult propagate_neg_infinity(ApspResult r, const Graph& g) {
    if (!r.negative_cycle) return r;
    const int n = g.n;
    std::vector<std::vector<int>> out(n), in(n);
    for (const Edge& e : g.edges) {
        out[e.from].push_back(e.to);
        in[e.to].push_back(e.from);
    }
    auto closure = [n](const std::vector<std::vector<int>>& adj, int start) {
        std::vector<char> seen(n, 0);
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
        }
        return seen;
    };
    for (int v : *r.negative_cycle) {
        std::vector<char> sources = closure(in, v);   // can reach v
        std::vector<char> targets = closure(out, v);  // reachable from v
        for (int i = 0; i < n; ++i) {
            if (!sources[i]) continue;
            for (int j = 0; j < n; ++j)
                if (targets[j]) r.distances(i, j) = kMinusInf;
        }
    }
    return r;
}

}  // namespace apsp
