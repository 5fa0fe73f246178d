#ifndef THEATERPERM_FOATA_HPP
#define THEATERPERM_FOATA_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "theaterperm/permutation.hpp"

namespace theaterperm {

/// One cycle in canonical (head-first) writing: elements[0] is the cycle
/// head, i.e. the maximum of the cycle.
struct Cycle {
    std::vector<int> elements;

    int head() const { return elements.front(); }
    std::size_t length() const { return elements.size(); }
};

/// Canonical cycle decomposition: every cycle head-first, cycles ordered by
/// strictly increasing head, fixed points kept as singletons.
struct CycleDecomposition {
    std::vector<Cycle> cycles;

    /// Total number of elements, i.e. the size of the underlying permutation.
    int size() const;
    std::size_t max_cycle_length() const;

    /// Rebuilds the permutation the cycles describe.
    Permutation to_permutation() const;

    /// "[5 2][7 6 4][8][9 1 3]", or "[52][764][8][913]" when compact (L <= 9).
    std::string to_string(bool compact = false) const;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Parses bracketed cycle notation, space-separated elements; the compact
/// digit form inside brackets is accepted only when every element is a
/// single digit. The cycles must partition 1..L. Throws ParseError.
CycleDecomposition parse_cycles(std::string_view text);

/// The Foata correspondence: concatenate the canonical cycle decomposition
/// and drop the brackets. A bijection on the symmetric group.
Permutation foata_forward(const Permutation& p);

/// Inverse of foata_forward: split the word immediately before each
/// left-to-right maximum; each segment is one head-first cycle.
Permutation foata_inverse(const Permutation& w);

int max_cycle_length(const Permutation& p);

/// Largest letter at or left of `position` in w. By the cycle-head property
/// of the Foata correspondence this is the head of the cycle containing the
/// letter w(position) in foata_inverse(w).
int cycle_head_of(const Permutation& w, int position);

}  // namespace theaterperm

#endif  // THEATERPERM_FOATA_HPP
