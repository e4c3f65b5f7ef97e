#include "apsp/io.hpp"

#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace apsp {

namespace {

constexpr char kMagic[4] = {'A', 'P', 'S', 'P'};
constexpr unsigned char kVersion = 1;

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> buf;
    for (int i = 0; i < 8; ++i) buf[i] = (char)((v >> (8 * i)) & 0xff);
    out.write(buf.data(), 8);
}

std::uint64_t get_u64(std::istream& in, const char* what) {
    std::array<char, 8> buf;
    in.read(buf.data(), 8);
    if (!in) throw ParseError(std::string("truncated dump reading ") + what, 0);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= (std::uint64_t)(unsigned char)buf[i] << (8 * i);
    return v;
}

}  // namespace

void write_tsv(std::ostream& out, const WeightMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << '\t';
            const Weight v = m(i, j);
            if (v >= kPlusInf)
                out << "inf";
            else if (v <= kMinusInf)
                out << "-inf";
            else
                out << v;
        }
        out << '\n';
    }
}

WeightMatrix read_tsv(std::istream& in) {
    std::vector<std::vector<Weight>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::vector<Weight> row;
        std::string tok;
        while (fields >> tok) {
            if (tok == "inf")
                row.push_back(kPlusInf);
            else if (tok == "-inf")
                row.push_back(kMinusInf);
            else {
                try {
                    std::size_t used = 0;
                    Weight v = std::stoll(tok, &used);
                    if (used != tok.size() || !is_finite(v)) throw std::invalid_argument(tok);
                    row.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError("bad matrix entry '" + tok + "'", lineno);
                }
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged matrix row", lineno);
        rows.push_back(std::move(row));
    }
    const int n = (int)rows.size();
    if (n == 0) throw ParseError("empty matrix", 0);
    if ((int)rows.front().size() != n) throw ParseError("matrix is not square", 0);
    WeightMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
}

void write_dump(std::ostream& out, const WeightMatrix& m) {
    out.write(kMagic, 4);
    out.put((char)kVersion);
    put_u64(out, (std::uint64_t)m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) put_u64(out, (std::uint64_t)m(i, j));
}

WeightMatrix read_dump(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) throw ParseError("bad dump magic", 0);
    const int version = in.get();
    if (version != kVersion) throw ParseError("unsupported dump version", 0);
    const std::uint64_t n64 = get_u64(in, "dimension");
    if (n64 == 0 || n64 > 1'000'000) throw ParseError("implausible dump dimension", 0);
    const int n = (int)n64;
    WeightMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Weight v = (Weight)get_u64(in, "entry");
            if (!is_finite(v) && v != kPlusInf && v != kMinusInf)
                throw ParseError("entry outside the finite range", 0);
            m(i, j) = v;
        }
    in.peek();
    if (!in.eof()) throw ParseError("trailing bytes after dump", 0);
    return m;
}

}  // namespace apsp
