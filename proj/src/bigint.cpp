#include "theaterperm/bigint.hpp"

#include <algorithm>

namespace theaterperm {

namespace {
using uint128 = unsigned __int128;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::factorial(unsigned n) {
    BigUint r(1);
    for (unsigned k = 2; k <= n; ++k) r.mul_u64(k);
    return r;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < n; ++k) {
        uint128 sum = static_cast<uint128>(limbs_[k]) + carry;
        if (k < rhs.limbs_.size()) sum += rhs.limbs_[k];
        limbs_[k] = static_cast<std::uint64_t>(sum);
        carry = static_cast<std::uint64_t>(sum >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigUint& BigUint::mul_u64(std::uint64_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < limbs_.size(); ++k) {
        uint128 prod = static_cast<uint128>(limbs_[k]) * m + carry;
        limbs_[k] = static_cast<std::uint64_t>(prod);
        carry = static_cast<std::uint64_t>(prod >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

int BigUint::compare(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t k = limbs_.size(); k-- > 0;) {
        if (limbs_[k] != rhs.limbs_[k]) return limbs_[k] < rhs.limbs_[k] ? -1 : 1;
    }
    return 0;
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint64_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 64;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

BigUint BigUint::from_limbs(std::vector<std::uint64_t> limbs) {
    BigUint r;
    r.limbs_ = std::move(limbs);
    r.trim();
    return r;
}

std::uint64_t BigUint::to_u64(bool& ok) const {
    if (limbs_.size() > 1) {
        ok = false;
        return 0;
    }
    ok = true;
    return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigUint::to_decimal() const {
    if (limbs_.empty()) return "0";
    // Repeated division by 10^19, the largest power of ten in a u64.
    constexpr std::uint64_t kChunk = 10000000000000000000ull;
    std::vector<std::uint64_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t k = work.size(); k-- > 0;) {
            uint128 cur = (static_cast<uint128>(rem) << 64) | work[k];
            work[k] = static_cast<std::uint64_t>(cur / kChunk);
            rem = static_cast<std::uint64_t>(cur % kChunk);
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::string digits = std::to_string(rem);
        if (work.empty()) {
            out.insert(0, digits);
        } else {
            out.insert(0, std::string(19 - digits.size(), '0') + digits);
        }
    }
    return out;
}

}  // namespace theaterperm
