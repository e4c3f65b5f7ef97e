#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace apsp {

// Extended integer weight. Finite values must stay within the 62-bit signed
// range; the two sentinels sit just outside it so stray arithmetic on them is
// detectable instead of silently wrapping.
using Weight = std::int64_t;

inline constexpr Weight kPlusInf = Weight{1} << 62;
inline constexpr Weight kMinusInf = -kPlusInf;
inline constexpr Weight kMaxFinite = kPlusInf - 1;

inline constexpr bool is_finite(Weight w) noexcept {
    return w > kMinusInf && w < kPlusInf;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct ContractError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

// Sum of two finite weights, checked against the 62-bit range.
Weight checked_add(Weight a, Weight b);

// Min-plus addend with a cap: operands of absolute value above `cap` (and
// non-finite operands) are treated as +inf.
inline Weight add_capped(Weight a, Weight b, Weight cap) {
    if (!is_finite(a) || !is_finite(b)) return kPlusInf;
    if (a > cap || a < -cap || b > cap || b < -cap) return kPlusInf;
    return checked_add(a, b);
}

template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Mat&) const = default;

    const std::vector<T>& data() const noexcept { return data_; }
    std::vector<T>& data() noexcept { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using WeightMatrix = Mat<Weight>;
// Witness entries: 0 = none / direct edge; k in 1..m names inner index k-1.
using WitnessMatrix = Mat<std::int32_t>;
// Successor entries: 0 = unset; v in 1..n names vertex v-1.
using SuccessorMatrix = Mat<std::int32_t>;
// Update stamps: 0 = never updated past the direct edge; otherwise the
// solver-wide sequence number of the assignment (strictly increasing).
using StampMatrix = Mat<std::int64_t>;

// Strictly increasing row/column index subset of 0..n-1.
struct Selector {
    std::vector<int> indices;

    static Selector all(int n);
    static Selector of(std::vector<int> indices, int n);

    int size() const noexcept { return static_cast<int>(indices.size()); }
};

template <typename T>
Mat<T> select(const Mat<T>& m, const Selector& rows, const Selector& cols) {
    Mat<T> out(rows.size(), cols.size());
    for (int a = 0; a < rows.size(); ++a)
        for (int b = 0; b < cols.size(); ++b)
            out(a, b) = m(rows.indices[a], cols.indices[b]);
    return out;
}

struct Edge {
    int from = 0;  // 0-based
    int to = 0;
    Weight weight = 0;
};

struct Graph {
    int n = 0;
    std::vector<Edge> edges;  // sorted by (from, to), duplicates collapsed
};

// Builds a graph from an arbitrary edge list, collapsing parallel edges to
// the minimum weight. Throws ContractError on out-of-range endpoints.
Graph make_graph(int n, std::vector<Edge> edges);

// DIMACS shortest-path format: "c" comments, one "p sp <n> <m>" line, then
// m lines "a <u> <v> <w>" with 1-based vertices.
Graph load_dimacs(std::istream& in);
void render_dimacs(const Graph& g, std::ostream& out);

WeightMatrix to_weight_matrix(const Graph& g);

Weight max_abs_weight(const WeightMatrix& d);

}  // namespace apsp
