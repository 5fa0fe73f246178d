#include "theaterperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace theaterperm {

namespace {

void validate_word(const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("permutation word must be nonempty");
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

bool is_separator(char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

}  // namespace

Permutation Permutation::from_word(std::vector<int> word) {
    validate_word(word);
    return Permutation(std::move(word), Validated{});
}

Permutation Permutation::identity(int size) {
    if (size < 1) throw std::invalid_argument("permutation size must be positive");
    std::vector<int> w(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) w[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(w), Validated{});
}

int Permutation::operator()(int position) const {
    if (position < 1 || position > size())
        throw std::out_of_range("position " + std::to_string(position) +
                                " out of range 1.." + std::to_string(size()));
    return word_[static_cast<size_t>(position - 1)];
}

Permutation parse_permutation(std::string_view text) {
    size_t lo = 0, hi = text.size();
    while (lo < hi && is_separator(text[lo])) ++lo;
    while (hi > lo && is_separator(text[hi - 1])) --hi;
    if (lo == hi) throw ParseError("empty permutation input", 1);
    std::string_view body = text.substr(lo, hi - lo);

    const bool has_separator =
        std::any_of(body.begin(), body.end(), [](char c) { return is_separator(c); });

    std::vector<int> word;
    if (!has_separator && body.size() > 1) {
        // Compact digit form: one value per character, so only L <= 9 is
        // representable without ambiguity.
        if (body.size() > 9)
            throw ParseError("compact digit form is limited to 9 values; use ',' or spaces",
                             10);
        for (size_t k = 0; k < body.size(); ++k) {
            char c = body[k];
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(std::string("non-digit character '") + c +
                                     "' in compact permutation",
                                 static_cast<int>(k + 1));
            word.push_back(c - '0');
        }
    } else {
        size_t pos = 0;
        int token_index = 0;
        while (pos < body.size()) {
            while (pos < body.size() && is_separator(body[pos])) ++pos;
            if (pos >= body.size()) break;
            size_t end = pos;
            while (end < body.size() && !is_separator(body[end])) ++end;
            std::string token(body.substr(pos, end - pos));
            ++token_index;
            size_t parsed = 0;
            long value = 0;
            try {
                value = std::stol(token, &parsed);
            } catch (const std::exception&) {
                parsed = 0;
            }
            if (parsed != token.size() || value < 0)
                throw ParseError("token " + std::to_string(token_index) + " ('" + token +
                                     "') is not a positive integer",
                                 token_index);
            word.push_back(static_cast<int>(value));
            pos = end;
        }
    }

    const int n = static_cast<int>(word.size());
    for (int k = 0; k < n; ++k) {
        int v = word[static_cast<size_t>(k)];
        if (v < 1 || v > n)
            throw ParseError("value " + std::to_string(v) + " at token " +
                                 std::to_string(k + 1) + " out of range 1.." +
                                 std::to_string(n),
                             k + 1);
    }
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k) {
        int v = word[static_cast<size_t>(k)];
        if (seen[static_cast<size_t>(v)])
            throw ParseError("duplicate value " + std::to_string(v) + " at token " +
                                 std::to_string(k + 1),
                             k + 1);
        seen[static_cast<size_t>(v)] = 1;
    }
    return Permutation::from_word(std::move(word));
}

std::string to_string(const Permutation& p, SerializeStyle style) {
    if (style == SerializeStyle::Auto)
        style = p.size() <= 9 ? SerializeStyle::Compact : SerializeStyle::Comma;
    std::string out;
    if (style == SerializeStyle::Compact) {
        if (p.size() > 9)
            throw std::invalid_argument("compact form requires L <= 9");
        for (int v : p.word()) out += static_cast<char>('0' + v);
        return out;
    }
    for (size_t k = 0; k < p.word().size(); ++k) {
        if (k) out += ',';
        out += std::to_string(p.word()[k]);
    }
    return out;
}

Permutation invert(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(p(i) - 1)] = i;
    return Permutation::from_word(std::move(w));
}

Permutation rotate180(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = n + 1 - p(n + 1 - i);
    return Permutation::from_word(std::move(w));
}

Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = n + 1 - p(i);
    return Permutation::from_word(std::move(w));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation::from_word(std::move(w));
}

PointDiagram point_diagram(const Permutation& p) {
    PointDiagram d;
    d.points.reserve(static_cast<size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) d.points.emplace_back(i, p(i));
    return d;
}

std::string render_diagram_ascii(const Permutation& p) {
    const int n = p.size();
    if (n > 99) throw std::invalid_argument("ascii diagram is limited to L <= 99");
    std::string out;
    out.reserve(static_cast<size_t>(n) * static_cast<size_t>(n + 1));
    // Rows top-down: y = L first, so the origin lands bottom-left.
    for (int y = n; y >= 1; --y) {
        for (int i = 1; i <= n; ++i) out += (p(i) == y) ? '*' : '.';
        out += '\n';
    }
    return out;
}

std::string render_diagram_svg(const Permutation& p) {
    const int n = p.size();
    const int cell = 24;
    const int margin = 36;
    const int side = n * cell + 2 * margin;
    const auto x_of = [&](int i) { return margin + (i - 1) * cell + cell / 2; };
    const auto y_of = [&](int v) { return side - margin - (v - 1) * cell - cell / 2; };

    // Label every tick for small boards, sparsely otherwise.
    const int label_step = n <= 30 ? 1 : (n + 29) / 30;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\""
        << side << "\" viewBox=\"0 0 " << side << " " << side << "\">\n"
        << "  <rect width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
    // Light grid.
    for (int k = 0; k <= n; ++k) {
        int gx = margin + k * cell;
        svg << "  <line x1=\"" << gx << "\" y1=\"" << margin << "\" x2=\"" << gx
            << "\" y2=\"" << side - margin << "\" stroke=\"#dddddd\"/>\n";
        int gy = margin + k * cell;
        svg << "  <line x1=\"" << margin << "\" y1=\"" << gy << "\" x2=\"" << side - margin
            << "\" y2=\"" << gy << "\" stroke=\"#dddddd\"/>\n";
    }
    // Axes.
    svg << "  <line x1=\"" << margin << "\" y1=\"" << side - margin << "\" x2=\""
        << side - margin << "\" y2=\"" << side - margin << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
        << "\" y2=\"" << side - margin << "\" stroke=\"black\"/>\n";
    for (int k = 1; k <= n; k += label_step) {
        svg << "  <text x=\"" << x_of(k) << "\" y=\"" << side - margin + 16
            << "\" font-size=\"11\" text-anchor=\"middle\">" << k << "</text>\n";
        svg << "  <text x=\"" << margin - 8 << "\" y=\"" << y_of(k) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << k << "</text>\n";
    }
    for (int i = 1; i <= n; ++i) {
        svg << "  <circle cx=\"" << x_of(i) << "\" cy=\"" << y_of(p(i))
            << "\" r=\"" << cell / 4 << "\" fill=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace theaterperm
