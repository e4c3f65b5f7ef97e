#include "apsp/paths.hpp"

#include <algorithm>
#include <numeric>

namespace apsp {

namespace {

struct PathBuilder {
    const WitnessMatrix& w;
    const WeightMatrix& d;
    std::vector<int> vertices;
    Weight total = 0;
    bool connected = true;
    long depth_limit;

    void expand(int i, int j, long depth) {
        if (depth > depth_limit)
            throw ContractError("reconstruct_path: witness recursion too deep");
        std::int32_t k = w(i, j);
        if (k == 0) {
            if (is_finite(d(i, j)) && connected)
                total = checked_add(total, d(i, j));
            else
                connected = false;
            vertices.push_back(j);
            return;
        }
        expand(i, k - 1, depth + 1);
        expand(k - 1, j, depth + 1);
    }
};

}  // namespace

PathTrace reconstruct_path(const WitnessMatrix& w, const WeightMatrix& d, int i, int j) {
    if (i == j && w(i, j) == 0) return {{i}, 0};
    PathBuilder b{w, d, {i}, 0, true, (long)w.rows() * w.rows() + 4};
    b.expand(i, j, 0);
    PathTrace out;
    out.vertices = std::move(b.vertices);
    out.total_weight = b.connected ? b.total : kPlusInf;
    return out;
}

SuccessorMatrix wit_to_suc(const WitnessMatrix& w, const StampMatrix& stamps,
                           const WeightMatrix& d, bool strict) {
    const int n = w.rows();
    SuccessorMatrix s(n, n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && stamps(i, j) == 0 && is_finite(d(i, j))) s(i, j) = j + 1;

    // Pairs in ascending order of their last-update stamp; each one strictly
    // precedes everything built from it.
    std::vector<std::pair<std::int64_t, int>> order;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && stamps(i, j) > 0) order.push_back({stamps(i, j), i * n + j});
    std::sort(order.begin(), order.end());

    std::vector<int> walk;
    for (auto [stamp, code] : order) {
        const int i = code / n, j = code % n;
        if (s(i, j) != 0) continue;
        const std::int32_t k = w(i, j);
        if (k == 0) {
            if (strict) throw ContractError("wit_to_suc: updated pair without witness");
            continue;
        }
        // Walk toward k along s(.,k-1) until a vertex that already knows its
        // way to j; verify the whole walk first so nothing dangles.
        walk.clear();
        int u = i;
        bool ok = true;
        while (s(u, j) == 0) {
            if ((int)walk.size() > n || s(u, k - 1) == 0) {
                ok = false;
                break;
            }
            walk.push_back(u);
            u = s(u, k - 1) - 1;
        }
        if (!ok) {
            if (strict) throw ContractError("wit_to_suc: broken successor walk");
            continue;
        }
        for (int v : walk) {
            s(v, j) = s(v, k - 1);
        }
    }
    return s;
}

PathTrace trace_simple_path(const SuccessorMatrix& s, const WeightMatrix& d, int i, int j) {
    if (i == j) return {{i}, 0};
    if (s(i, j) == 0) throw ContractError("trace_simple_path: no path recorded");
    const int n = s.rows();
    std::vector<char> seen(n, 0);
    PathTrace out;
    out.vertices.push_back(i);
    seen[i] = 1;
    int u = i;
    while (u != j) {
        int v = s(u, j) - 1;
        if (v < 0) throw ContractError("trace_simple_path: trace hit an unset entry");
        if (seen[v]) throw ContractError("trace_simple_path: repeated vertex");
        if (!is_finite(d(u, v))) throw ContractError("trace_simple_path: non-edge step");
        out.total_weight = checked_add(out.total_weight, d(u, v));
        out.vertices.push_back(v);
        seen[v] = 1;
        u = v;
    }
    return out;
}

}  // namespace apsp
