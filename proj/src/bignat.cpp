#include "apsp/bignat.hpp"

#include <algorithm>

namespace apsp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::size_t BigNat::bits() const noexcept {
    if (limbs_.empty()) return 0;
    u64 top = limbs_.back();
    std::size_t b = (limbs_.size() - 1) * 64;
    while (top) {
        ++b;
        top >>= 1;
    }
    return b;
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigNat::add(const BigNat& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = (u128)limbs_[i] + carry;
        if (i < other.limbs_.size()) s += other.limbs_[i];
        limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    if (carry) limbs_.push_back(carry);
}

void BigNat::mul_small(u64 m) {
    if (m == 0) {
        limbs_.clear();
        return;
    }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 p = (u128)limb * m + carry;
        limb = (u64)p;
        carry = (u64)(p >> 64);
    }
    if (carry) limbs_.push_back(carry);
}

void BigNat::add_mul_small(const BigNat& other, u64 m) {
    if (m == 0 || other.is_zero()) return;
    std::size_t need = other.limbs_.size() + 1;
    if (limbs_.size() < need) limbs_.resize(need, 0);
    u64 carry = 0;
    std::size_t i = 0;
    for (; i < other.limbs_.size(); ++i) {
        u128 p = (u128)other.limbs_[i] * m + limbs_[i] + carry;
        limbs_[i] = (u64)p;
        carry = (u64)(p >> 64);
    }
    for (; carry && i < limbs_.size(); ++i) {
        u128 s = (u128)limbs_[i] + carry;
        limbs_[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    if (carry) limbs_.push_back(carry);
    trim();
}

u64 BigNat::mod_small(u64 m) const {
    u128 r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = ((r << 64) | limbs_[i]) % m;
    return (u64)r;
}

int BigNat::compare(const BigNat& other) const noexcept {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    return 0;
}

std::string BigNat::to_string() const {
    if (is_zero()) return "0";
    std::vector<u64> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        u128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            u128 cur = (rem << 64) | work[i];
            work[i] = (u64)(cur / 10);
            rem = cur % 10;
        }
        digits.push_back(char('0' + (int)rem));
        while (!work.empty() && work.back() == 0) work.pop_back();
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace apsp
