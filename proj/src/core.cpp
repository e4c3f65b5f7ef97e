#include "apsp/core.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace apsp {

Weight checked_add(Weight a, Weight b) {
    if (!is_finite(a) || !is_finite(b))
        throw OverflowError("arithmetic on non-finite weight");
    Weight s;
    if (__builtin_add_overflow(a, b, &s) || s > kMaxFinite || s < -kMaxFinite)
        throw OverflowError("weight sum exceeds the 62-bit finite range");
    return s;
}

Selector Selector::all(int n) {
    Selector s;
    s.indices.resize(n);
    for (int i = 0; i < n; ++i) s.indices[i] = i;
    return s;
}

Selector Selector::of(std::vector<int> indices, int n) {
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] >= n)
            throw ContractError("selector index out of range");
        if (k > 0 && indices[k] <= indices[k - 1])
            throw ContractError("selector indices must be strictly increasing");
    }
    return Selector{std::move(indices)};
}

Graph make_graph(int n, std::vector<Edge> edges) {
    std::map<std::pair<int, int>, Weight> best;
    for (const Edge& e : edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw ContractError("edge endpoint out of range");
        if (!is_finite(e.weight)) throw ContractError("edge weight must be finite");
        auto key = std::make_pair(e.from, e.to);
        auto it = best.find(key);
        if (it == best.end() || e.weight < it->second) best[key] = e.weight;
    }
    Graph g;
    g.n = n;
    g.edges.reserve(best.size());
    for (const auto& [key, w] : best) g.edges.push_back({key.first, key.second, w});
    return g;
}

Graph load_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long declared_arcs = 0;
    long long seen_arcs = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            std::string kind;
            if (!(ls >> kind >> n >> declared_arcs) || kind != "sp" || n < 0 ||
                declared_arcs < 0)
                throw ParseError("malformed problem line, expected 'p sp <n> <m>'", lineno);
        } else if (tag == "a") {
            if (n < 0) throw ParseError("arc before problem line", lineno);
            long long u, v, w;
            if (!(ls >> u >> v >> w))
                throw ParseError("malformed arc line, expected 'a <u> <v> <w>'", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex index out of range", lineno);
            if (w > kMaxFinite || w < -kMaxFinite)
                throw ParseError("arc weight outside the finite range", lineno);
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1),
                             static_cast<Weight>(w)});
            ++seen_arcs;
        } else {
            throw ParseError("unknown line tag '" + tag + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing problem line", lineno + 1);
    if (seen_arcs != declared_arcs)
        throw ParseError("arc count mismatch: declared " + std::to_string(declared_arcs) +
                             ", found " + std::to_string(seen_arcs),
                         lineno + 1);
    return make_graph(n, std::move(edges));
}

void render_dimacs(const Graph& g, std::ostream& out) {
    out << "p sp " << g.n << ' ' << g.edges.size() << '\n';
    for (const Edge& e : g.edges)
        out << "a " << e.from + 1 << ' ' << e.to + 1 << ' ' << e.weight << '\n';
}

WeightMatrix to_weight_matrix(const Graph& g) {
    WeightMatrix d(g.n, g.n, kPlusInf);
    for (int i = 0; i < g.n; ++i) d(i, i) = 0;
    for (const Edge& e : g.edges)
        if (e.from != e.to) d(e.from, e.to) = std::min(d(e.from, e.to), e.weight);
    return d;
}

Weight max_abs_weight(const WeightMatrix& d) {
    Weight m = 0;
    for (Weight w : d.data())
        if (is_finite(w)) m = std::max(m, w < 0 ? -w : w);
    return m;
}

}  // namespace apsp
