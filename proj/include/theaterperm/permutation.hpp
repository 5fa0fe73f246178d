#ifndef THEATERPERM_PERMUTATION_HPP
#define THEATERPERM_PERMUTATION_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "theaterperm/errors.hpp"

namespace theaterperm {

/// A permutation of {1,...,L} in one-line notation: word[i-1] = s(i).
/// Positions and values are 1-based on the whole public surface.
/// Immutable after construction; construction validates the word.
class Permutation {
public:
    /// Builds from a one-line word; throws std::invalid_argument unless the
    /// word is a rearrangement of 1..L.
    static Permutation from_word(std::vector<int> word);

    static Permutation identity(int size);

    int size() const { return static_cast<int>(word_.size()); }

    /// s(position), 1-based. Throws std::out_of_range if position is not in 1..L.
    int operator()(int position) const;

    /// One-line word (index 0 holds s(1)).
    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation&) const = default;

private:
    struct Validated {};
    Permutation(std::vector<int> word, Validated) : word_(std::move(word)) {}

    std::vector<int> word_;
};

/// Parses either separated integers ("3,5,9" / "3 5 9") or, for L <= 9, a
/// compact digit string ("359"). Throws ParseError with the offending
/// token/character position.
Permutation parse_permutation(std::string_view text);

enum class SerializeStyle {
    Comma,    // "3,5,9,7,2,4,6,8,1"
    Compact,  // "359724681", only valid when L <= 9
    Auto,     // Compact when L <= 9, Comma otherwise
};

std::string to_string(const Permutation& p, SerializeStyle style = SerializeStyle::Comma);

/// Inverse: q with q(p(i)) = i.
Permutation invert(const Permutation& p);

/// The 180-degree rotation of the point diagram: i -> L+1 - p(L+1-i).
/// An involution.
Permutation rotate180(const Permutation& p);

/// Value complement: i -> L+1 - p(i). An involution.
Permutation complement(const Permutation& p);

/// Word reversal: i -> p(L+1-i). Satisfies rotate180(p) == complement(reverse(p)).
Permutation reverse(const Permutation& p);

/// The graph {(i, s(i))} of the permutation, 1-based coordinates.
struct PointDiagram {
    std::vector<std::pair<int, int>> points;
};

PointDiagram point_diagram(const Permutation& p);

/// L x L character grid, origin bottom-left, '*' marks (i, s(i)).
/// Throws std::invalid_argument when L > 99.
std::string render_diagram_ascii(const Permutation& p);

/// Standalone SVG document, mathematical orientation (ordinate grows upward),
/// one filled circle per point, labeled axes.
std::string render_diagram_svg(const Permutation& p);

}  // namespace theaterperm

#endif  // THEATERPERM_PERMUTATION_HPP
