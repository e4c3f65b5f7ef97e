#include "apsp/bridging.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

namespace apsp {

namespace {

bool add_unique(std::vector<int>& acc, int v) {
    if (std::find(acc.begin(), acc.end(), v) != acc.end()) return false;
    acc.push_back(v);
    return true;
}

int collect_sub_path(const WitnessMatrix& w, int i, int j, int budget,
                     std::vector<int>& acc) {
    if (budget <= 0 || w(i, j) == 0) return 0;
    const int before = (int)acc.size();
    const int k = w(i, j) - 1;
    collect_sub_path(w, i, k, budget - 1, acc);  // reserve one slot for k itself
    add_unique(acc, k);
    collect_sub_path(w, k, j, budget - (int)(acc.size() - before), acc);
    return (int)acc.size() - before;
}

int collect_sub_path_upd(WeightMatrix& f, WitnessMatrix& w, int a, int b, int i, int j,
                         int budget, StampCtx ctx, std::vector<int>& acc) {
    if (budget <= 0 || w(i, j) == 0) return 0;
    const int before = (int)acc.size();
    const int k = w(i, j) - 1;

    if (is_finite(f(a, i)) && is_finite(f(i, k))) {
        Weight via = checked_add(f(a, i), f(i, k));
        if (via < f(a, k)) {
            f(a, k) = via;
            w(a, k) = i + 1;
            ctx.mark(a, k);
        }
    }
    if (is_finite(f(k, j)) && is_finite(f(j, b))) {
        Weight via = checked_add(f(k, j), f(j, b));
        if (via < f(k, b)) {
            f(k, b) = via;
            w(k, b) = j + 1;
            ctx.mark(k, b);
        }
    }

    collect_sub_path_upd(f, w, a, b, i, k, budget - 1, ctx, acc);
    add_unique(acc, k);
    collect_sub_path_upd(f, w, a, b, k, j, budget - (int)(acc.size() - before), ctx, acc);
    return (int)acc.size() - before;
}

// Successor-guided walk from i to j: collects the first `budget` intermediate
// vertices and relaxes f along the traced path. All relaxations are sums of
// current f entries, so f >= delta is preserved even on unsettled pairs.
std::vector<int> successor_walk_relax(WeightMatrix& f, WitnessMatrix& w,
                                      const SuccessorMatrix& succ, const WeightMatrix& d,
                                      int i, int j, int budget, StampCtx ctx) {
    std::vector<int> collected;
    if (i == j || succ(i, j) == 0) return collected;
    const int n = f.rows();

    std::vector<int> path{i};
    int u = i;
    for (int step = 0; step < n; ++step) {
        int v = succ(u, j) - 1;
        if (v < 0 || !is_finite(d(u, v))) break;  // dead end in a partial matrix
        path.push_back(v);
        if (v == j) break;
        u = v;
    }
    const int last = (int)path.size() - 1;
    for (int t = 1; t < last && (int)collected.size() < budget; ++t)
        add_unique(collected, path[t]);

    for (int t = 1; t < last; ++t) {
        if (is_finite(f(i, path[t - 1])) && is_finite(f(path[t - 1], path[t]))) {
            Weight via = checked_add(f(i, path[t - 1]), f(path[t - 1], path[t]));
            if (via < f(i, path[t])) {
                f(i, path[t]) = via;
                w(i, path[t]) = path[t - 1] + 1;
                ctx.mark(i, path[t]);
            }
        }
    }
    for (int t = last - 1; t >= 1; --t) {
        if (is_finite(f(path[t], path[t + 1])) && is_finite(f(path[t + 1], j))) {
            Weight via = checked_add(f(path[t], path[t + 1]), f(path[t + 1], j));
            if (via < f(path[t], j)) {
                f(path[t], j) = via;
                w(path[t], j) = path[t + 1] + 1;
                ctx.mark(path[t], j);
            }
        }
    }
    return collected;
}

}  // namespace

bool BridgingSet::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

BridgingSet rand_bridging_set(int n, double s, std::uint64_t seed) {
    if (n < 1 || s < 1.0) throw ContractError("rand_bridging_set needs n >= 1, s >= 1");
    BridgingSet b;
    b.s = s;
    const double p = 9.0 * std::log((double)n) / s;
    if (p >= 1.0) {
        b.vertices.resize(n);
        for (int v = 0; v < n; ++v) b.vertices[v] = v;
        return b;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 0; v < n; ++v)
        if (coin(rng) < p) b.vertices.push_back(v);
    return b;
}

std::vector<int> sub_path(const WitnessMatrix& w, int i, int j, int budget) {
    std::vector<int> acc;
    collect_sub_path(w, i, j, budget, acc);
    return acc;
}

BridgingSet hitting_set(const std::vector<std::vector<int>>& collection, int n) {
    for (const auto& set : collection) {
        if (set.empty()) throw ContractError("hitting_set: empty member set");
        for (int v : set)
            if (v < 0 || v >= n) throw ContractError("hitting_set: member out of range");
    }

    std::vector<std::vector<int>> sets_of(n);
    for (std::size_t sid = 0; sid < collection.size(); ++sid)
        for (int v : collection[sid]) sets_of[v].push_back((int)sid);
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) count[v] = (int)sets_of[v].size();

    // Max count, ties to smallest index; lazy entries revalidated on pop.
    using Entry = std::pair<int, int>;  // (count, -vertex)
    std::priority_queue<Entry> heap;
    for (int v = 0; v < n; ++v)
        if (count[v] > 0) heap.push({count[v], -v});

    std::vector<char> hit(collection.size(), 0);
    std::size_t remaining = collection.size();
    BridgingSet b;
    while (remaining > 0) {
        auto [cnt, nv] = heap.top();
        heap.pop();
        int v = -nv;
        if (cnt != count[v]) continue;  // stale
        b.vertices.push_back(v);
        for (int sid : sets_of[v]) {
            if (hit[sid]) continue;
            hit[sid] = 1;
            --remaining;
            for (int x : collection[sid]) {
                --count[x];
                if (count[x] > 0) heap.push({count[x], -x});
            }
        }
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    return b;
}

BridgingSet find_bridge(const WitnessMatrix& w, int s) {
    const int n = w.rows();
    std::vector<std::vector<int>> collection;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> u = sub_path(w, i, j, s - 1);
            add_unique(u, i);
            add_unique(u, j);
            // eta >= s pairs collect s-1 intermediates plus both endpoints;
            // anything smaller needs no bridging.
            if ((int)u.size() > s) collection.push_back(std::move(u));
        }
    BridgingSet b = hitting_set(collection, n);
    b.s = std::max(1, s);
    return b;
}

std::vector<int> sub_path_upd(WeightMatrix& f, WitnessMatrix& w, int a, int b, int i, int j,
                              int budget, StampCtx ctx) {
    std::vector<int> acc;
    collect_sub_path_upd(f, w, a, b, i, j, budget, ctx, acc);
    return acc;
}

BridgingSet find_bridge_upd(WeightMatrix& f, WitnessMatrix& w, int s, StampCtx ctx,
                            const SuccessorMatrix* succ, const WeightMatrix* d) {
    const int n = f.rows();
    std::vector<std::vector<int>> collection;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> u = succ ? successor_walk_relax(f, w, *succ, *d, i, j, s - 1, ctx)
                                      : sub_path_upd(f, w, i, j, i, j, s - 1, ctx);
            add_unique(u, i);
            add_unique(u, j);
            if ((int)u.size() > s) collection.push_back(std::move(u));
        }
    BridgingSet b = hitting_set(collection, n);
    b.s = std::max(1, s);
    return b;
}

}  // namespace apsp
