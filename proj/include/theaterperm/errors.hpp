#ifndef THEATERPERM_ERRORS_HPP
#define THEATERPERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace theaterperm {

/// Malformed permutation or cycle text. `position` is the 1-based index of
/// the offending token (separated formats) or character (compact format).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, int position)
        : std::invalid_argument(what), position_(position) {}

    int position() const { return position_; }

private:
    int position_;
};

/// Request exceeds a hard feasibility cap (exhaustive enumeration or search).
class InfeasibleSizeError : public std::runtime_error {
public:
    explicit InfeasibleSizeError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace theaterperm

#endif  // THEATERPERM_ERRORS_HPP
