#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apsp {

// Minimal arbitrary-precision natural number: little-endian 64-bit limbs.
// Only the handful of operations the residue reconstruction needs.
class BigNat {
public:
    BigNat() = default;
    explicit BigNat(std::uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    bool is_zero() const noexcept { return limbs_.empty(); }
    std::size_t bits() const noexcept;

    void add(const BigNat& other);
    void mul_small(std::uint64_t m);
    void add_mul_small(const BigNat& other, std::uint64_t m);  // *this += other * m
    std::uint64_t mod_small(std::uint64_t m) const;

    // -1, 0, 1 as in three-way comparison with other.
    int compare(const BigNat& other) const noexcept;
    bool operator<(const BigNat& o) const noexcept { return compare(o) < 0; }
    bool operator==(const BigNat& o) const noexcept { return compare(o) == 0; }

    std::string to_string() const;  // decimal, for diagnostics

private:
    void trim();
    std::vector<std::uint64_t> limbs_;
};

}  // namespace apsp
