#ifndef THEATERPERM_RNG_HPP
#define THEATERPERM_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "theaterperm/bigint.hpp"

namespace theaterperm {

/// Seedable generator used by the sampler and the seating simulation.
/// The engine is std::mt19937_64 (sequence fixed by the standard) and bounded
/// draws use bitmask rejection, so identical seeds give identical results on
/// every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    static const char* algorithm() { return "mt19937_64"; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw from {0, ..., n-1}, n >= 1. Unbiased: draws masked to the
    /// smallest covering power of two and rejects overshoots.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(n - 1);
        for (;;) {
            std::uint64_t v = next_u64() & mask;
            if (v < n) return v;
        }
    }

    /// Uniform draw from {0, ..., n-1} for an arbitrary-precision bound.
    BigUint below_big(const BigUint& n) {
        const std::size_t bits = n.bit_length();
        if (bits <= 64) {
            bool ok = false;
            std::uint64_t small = n.to_u64(ok);
            return BigUint(below(small));
        }
        const std::size_t limbs = (bits + 63) / 64;
        const unsigned top_bits = static_cast<unsigned>(bits - (limbs - 1) * 64);
        const std::uint64_t top_mask =
            top_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
        for (;;) {
            std::vector<std::uint64_t> raw(limbs);
            for (std::size_t k = 0; k < limbs; ++k) raw[k] = next_u64();
            raw[limbs - 1] &= top_mask;
            BigUint v = BigUint::from_limbs(std::move(raw));
            if (v < n) return v;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace theaterperm

#endif  // THEATERPERM_RNG_HPP
