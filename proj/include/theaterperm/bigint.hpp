#ifndef THEATERPERM_BIGINT_HPP
#define THEATERPERM_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace theaterperm {

/// Unsigned arbitrary-precision integer, little-endian 64-bit limbs.
/// Supports exactly what the counting code needs: addition, multiplication
/// by a machine word, comparison, bit access and decimal output.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {  // NOLINT: implicit on purpose
        if (v) limbs_.push_back(v);
    }

    static BigUint factorial(unsigned n);

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
        lhs += rhs;
        return lhs;
    }

    BigUint& mul_u64(std::uint64_t m);
    friend BigUint operator*(BigUint lhs, std::uint64_t m) {
        lhs.mul_u64(m);
        return lhs;
    }

    int compare(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const { return compare(rhs) == 0; }
    bool operator!=(const BigUint& rhs) const { return compare(rhs) != 0; }
    bool operator<(const BigUint& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const BigUint& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const BigUint& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const BigUint& rhs) const { return compare(rhs) >= 0; }

    /// Number of significant bits; 0 for zero.
    std::size_t bit_length() const;

    /// Builds a value from raw limbs (used by the random draw below a bound).
    static BigUint from_limbs(std::vector<std::uint64_t> limbs);

    std::size_t limb_count() const { return limbs_.size(); }

    /// Value if it fits in 64 bits, otherwise nullopt-like sentinel via `ok`.
    std::uint64_t to_u64(bool& ok) const;

    std::string to_decimal() const;

private:
    void trim();

    std::vector<std::uint64_t> limbs_;  // empty == 0, no trailing zero limbs
};

}  // namespace theaterperm

#endif  // THEATERPERM_BIGINT_HPP
