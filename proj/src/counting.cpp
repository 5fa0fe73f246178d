#include "theaterperm/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "theaterperm/anomaly.hpp"
#include "theaterperm/errors.hpp"
#include "theaterperm/foata.hpp"
#include "theaterperm/rng.hpp"

namespace theaterperm {

BigUint CountTable::count(int length, int bound) const {
    if (length < 0) throw std::invalid_argument("length must be nonnegative");
    if (bound < 1) throw std::invalid_argument("b must be >= 1");
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<BigUint>& row = rows_[bound];
    if (row.empty()) row.push_back(BigUint(1));  // D(0) = 1
    while (static_cast<int>(row.size()) <= length) {
        const int n = static_cast<int>(row.size());
        BigUint total;
        const int kmax = std::min(bound, n);
        for (int k = 1; k <= kmax; ++k) {
            // (n-1)(n-2)...(n-k+1) ordered choices for the rest of the cycle
            // through a distinguished element.
            BigUint term = row[static_cast<size_t>(n - k)];
            for (int t = 1; t < k; ++t) term.mul_u64(static_cast<std::uint64_t>(n - t));
            total += term;
        }
        row.push_back(std::move(total));
    }
    return row[static_cast<size_t>(length)];
}

BigUint count_bounded_cycles(int length, int bound) {
    static CountTable table;  // thread-safe, see CountTable
    return table.count(length, bound);
}

ClassEnumerator::ClassEnumerator(int length, int bound, PermClass cls, int cap)
    : bound_(bound), cls_(cls) {
    if (length < 1) throw std::invalid_argument("length must be positive");
    if (bound < 1) throw std::invalid_argument("b must be >= 1");
    const int effective_cap = std::min(cap, kEnumerateHardCap);
    if (length > effective_cap)
        throw InfeasibleSizeError("exhaustive enumeration refused: length " +
                                  std::to_string(length) + " exceeds cap " +
                                  std::to_string(effective_cap));
    word_.resize(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) word_[static_cast<size_t>(i)] = i + 1;
}

bool ClassEnumerator::matches(const Permutation& p) const {
    switch (cls_) {
        case PermClass::BoundedCycles:
            return max_cycle_length(p) <= bound_;
        case PermClass::TheaterAdmissible:
            return is_theater_admissible(p, bound_);
        case PermClass::AnomalyFree:
            return !has_b_anomaly(p, bound_);
    }
    return false;
}

std::optional<Permutation> ClassEnumerator::next() {
    while (!done_) {
        if (!first_) {
            if (!std::next_permutation(word_.begin(), word_.end())) {
                done_ = true;
                break;
            }
        }
        first_ = false;
        Permutation p = Permutation::from_word(word_);
        if (matches(p)) return p;
    }
    return std::nullopt;
}

BigUint count_class_brute(int length, int bound, PermClass cls, int cap) {
    if (length == 0) return BigUint(1);  // the empty word
    ClassEnumerator en(length, bound, cls, cap);
    std::uint64_t n = 0;
    while (en.next()) ++n;
    return BigUint(n);
}

Permutation sample_bounded(int length, int bound, std::uint64_t seed) {
    if (length < 1) throw std::invalid_argument("length must be positive");
    if (bound < 1) throw std::invalid_argument("b must be >= 1");

    SeededRng rng(seed);
    std::vector<int> remaining(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) remaining[static_cast<size_t>(i)] = i + 1;
    std::vector<int> word(static_cast<size_t>(length), 0);

    while (!remaining.empty()) {
        const int n = static_cast<int>(remaining.size());
        const int kmax = std::min(bound, n);

        // Cycle length of the largest remaining label.
        int chosen = kmax;
        if (kmax > 1) {
            const BigUint total = count_bounded_cycles(n, bound);
            const BigUint draw = rng.below_big(total);
            BigUint cum;
            for (int k = 1; k <= kmax; ++k) {
                BigUint weight = count_bounded_cycles(n - k, bound);
                for (int t = 1; t < k; ++t)
                    weight.mul_u64(static_cast<std::uint64_t>(n - t));
                cum += weight;
                if (draw < cum) {
                    chosen = k;
                    break;
                }
            }
        }

        const int head = remaining.back();  // largest remaining label
        std::vector<int> pool(remaining.begin(), remaining.end() - 1);
        std::vector<int> others;
        others.reserve(static_cast<size_t>(chosen - 1));
        for (int t = 1; t < chosen; ++t) {
            const std::uint64_t j = rng.below(pool.size());
            others.push_back(pool[static_cast<size_t>(j)]);
            pool[static_cast<size_t>(j)] = pool.back();
            pool.pop_back();
        }

        // Close the cycle head -> others[0] -> ... -> head.
        int prev = head;
        for (int v : others) {
            word[static_cast<size_t>(prev - 1)] = v;
            prev = v;
        }
        word[static_cast<size_t>(prev - 1)] = head;

        std::sort(pool.begin(), pool.end());
        remaining = std::move(pool);
    }
    return Permutation::from_word(std::move(word));
}

}  // namespace theaterperm
