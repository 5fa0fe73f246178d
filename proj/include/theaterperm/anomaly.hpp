#ifndef THEATERPERM_ANOMALY_HPP
#define THEATERPERM_ANOMALY_HPP

#include <optional>
#include <vector>

#include "theaterperm/permutation.hpp"

namespace theaterperm {

/// A located b-anomaly in a word a_1...a_L: the block a_{i+1}...a_{i+b} is
/// dominated by the letter a_h standing strictly left of it.
/// blocker is the largest such dominating letter (h is its position).
struct AnomalyWitness {
    int block_start;       // i >= 1; the block occupies positions i+1..i+b
    int b;                 // block width
    int blocker_position;  // h, 1 <= h <= i
    int blocker_value;     // a_h, a_h > max(a_{i+1},...,a_{i+b})

    bool operator==(const AnomalyWitness&) const = default;
};

/// A violated seating condition: a block of b consecutive positions
/// j+1..j+b lying entirely before position i whose letters all exceed s(i).
struct TheaterViolation {
    int block_start;       // j >= 0
    int victim_position;   // i, with j+b < i

    bool operator==(const TheaterViolation&) const = default;
};

/// Witness with the smallest block_start, or nullopt if w is b-anomaly-free.
/// O(L) via prefix maxima and sliding-window maxima. Throws on b < 1.
std::optional<AnomalyWitness> find_b_anomaly_first(const Permutation& w, int b);

/// Every block start admitting a witness, in increasing order, each paired
/// with its maximal blocker.
std::vector<AnomalyWitness> find_b_anomaly_all(const Permutation& w, int b);

bool has_b_anomaly(const Permutation& w, int b);

/// Reference detector: direct O(L^2 * b) scan of the definition, kept
/// independent of the sliding-window kernel it anchors.
std::optional<AnomalyWitness> find_b_anomaly_first_naive(const Permutation& w, int b);
std::vector<AnomalyWitness> find_b_anomaly_all_naive(const Permutation& w, int b);

/// True iff no TheaterViolation exists for this b. O(L). Throws on b < 1.
bool is_theater_admissible(const Permutation& s, int b);

/// The violation with the smallest victim position, ties broken by the
/// smallest block start; nullopt when admissible.
std::optional<TheaterViolation> find_theater_violation(const Permutation& s, int b);

/// Reference admissibility check: direct scan of the seating condition.
bool is_theater_admissible_naive(const Permutation& s, int b);
std::optional<TheaterViolation> find_theater_violation_naive(const Permutation& s, int b);

/// rotate180(foata_forward(s)). Total on the symmetric group; restricted to
/// {max cycle length <= b} it lands exactly on the theater-admissible class.
Permutation bounded_to_theater(const Permutation& s);

/// foata_inverse(rotate180(s)); exact inverse of bounded_to_theater.
Permutation theater_to_bounded(const Permutation& s);

}  // namespace theaterperm

#endif  // THEATERPERM_ANOMALY_HPP
