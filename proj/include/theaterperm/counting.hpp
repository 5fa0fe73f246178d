#ifndef THEATERPERM_COUNTING_HPP
#define THEATERPERM_COUNTING_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "theaterperm/bigint.hpp"
#include "theaterperm/permutation.hpp"

namespace theaterperm {

inline constexpr int kEnumerateDefaultCap = 9;
inline constexpr int kEnumerateHardCap = 12;
inline constexpr int kSeatingSearchCap = 8;

enum class PermClass {
    BoundedCycles,      // every cycle length <= b
    TheaterAdmissible,  // no seating violation for this b
    AnomalyFree,        // no b-anomaly
};

/// Memoized table of D(L, b) = |{s in S_L : every cycle length <= b}|,
/// computed by the recurrence
///   D(L) = sum_{k=1}^{min(b,L)} (L-1)(L-2)...(L-k+1) * D(L-k),  D(0) = 1.
/// Rows are cached per b. Lookups and inserts are serialized by an internal
/// mutex, so one table may be shared across threads.
class CountTable {
public:
    BigUint count(int length, int bound) const;

private:
    mutable std::mutex mutex_;
    mutable std::map<int, std::vector<BigUint>> rows_;  // bound -> D(0..L)
};

/// Convenience wrapper over a process-wide shared CountTable.
BigUint count_bounded_cycles(int length, int bound);

/// Lexicographic stream over the one-line words of S_L that lie in `cls`.
/// Lengths above `cap` are refused (InfeasibleSizeError), and nothing above
/// kEnumerateHardCap is ever enumerated.
class ClassEnumerator {
public:
    ClassEnumerator(int length, int bound, PermClass cls, int cap = kEnumerateDefaultCap);

    /// Next member, or nullopt when the stream is exhausted.
    std::optional<Permutation> next();

private:
    bool matches(const Permutation& p) const;

    int bound_;
    PermClass cls_;
    std::vector<int> word_;
    bool done_ = false;
    bool first_ = true;
};

/// Counts the members of the class by exhaustive filtering; the independent
/// witness for the cardinality identity, never routed through the recurrence.
BigUint count_class_brute(int length, int bound, PermClass cls,
                          int cap = kEnumerateDefaultCap);

/// Uniform draw from {s in S_L : every cycle length <= bound}.
/// Recursive decomposition: the cycle through the largest remaining label
/// gets length k with probability (n-1)...(n-k+1) * D(n-k) / D(n), its other
/// members are an ordered sample without replacement, then recurse.
/// Deterministic for a given seed (see SeededRng::algorithm()).
Permutation sample_bounded(int length, int bound, std::uint64_t seed);

}  // namespace theaterperm

#endif  // THEATERPERM_COUNTING_HPP
