#include "theaterperm/foata.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace theaterperm {

int CycleDecomposition::size() const {
    int n = 0;
    for (const Cycle& c : cycles) n += static_cast<int>(c.elements.size());
    return n;
}

std::size_t CycleDecomposition::max_cycle_length() const {
    std::size_t best = 0;
    for (const Cycle& c : cycles) best = std::max(best, c.length());
    return best;
}

Permutation CycleDecomposition::to_permutation() const {
    const int n = size();
    std::vector<int> word(static_cast<size_t>(n), 0);
    for (const Cycle& c : cycles) {
        const auto& e = c.elements;
        for (size_t k = 0; k < e.size(); ++k) {
            int from = e[k];
            int to = e[(k + 1) % e.size()];
            if (from < 1 || from > n) throw std::invalid_argument("cycle element out of range");
            word[static_cast<size_t>(from - 1)] = to;
        }
    }
    return Permutation::from_word(std::move(word));
}

std::string CycleDecomposition::to_string(bool compact) const {
    if (compact && size() > 9)
        throw std::invalid_argument("compact cycle form requires L <= 9");
    std::string out;
    for (const Cycle& c : cycles) {
        out += '[';
        for (size_t k = 0; k < c.elements.size(); ++k) {
            if (k && !compact) out += ' ';
            out += compact ? std::string(1, static_cast<char>('0' + c.elements[k]))
                           : std::to_string(c.elements[k]);
        }
        out += ']';
    }
    return out;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
    const int n = p.size();
    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    std::vector<Cycle> cycles;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        std::vector<int> elems;
        int cur = start;
        do {
            visited[static_cast<size_t>(cur)] = 1;
            elems.push_back(cur);
            cur = p(cur);
        } while (cur != start);
        // Rotate so the maximum leads; the cycle head is unique.
        auto it = std::max_element(elems.begin(), elems.end());
        std::rotate(elems.begin(), it, elems.end());
        cycles.push_back(Cycle{std::move(elems)});
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.head() < b.head(); });
    return CycleDecomposition{std::move(cycles)};
}

namespace {

long parse_element(const std::string& token, int position) {
    size_t parsed = 0;
    long v = 0;
    try {
        v = std::stol(token, &parsed);
    } catch (const std::exception&) {
        parsed = 0;
    }
    if (parsed != token.size() || v < 1)
        throw ParseError("bad cycle element '" + token + "'", position);
    return v;
}

}  // namespace

CycleDecomposition parse_cycles(std::string_view text) {
    // Pass 1: split into bracketed chunks.
    struct RawCycle {
        std::string inner;
        int position;  // 1-based offset of the opening bracket
    };
    std::vector<RawCycle> raw;
    size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        if (c != '[')
            throw ParseError("expected '[' in cycle notation", static_cast<int>(pos + 1));
        size_t close = text.find(']', pos);
        if (close == std::string_view::npos)
            throw ParseError("unterminated cycle", static_cast<int>(pos + 1));
        raw.push_back(RawCycle{std::string(text.substr(pos + 1, close - pos - 1)),
                               static_cast<int>(pos + 1)});
        pos = close + 1;
    }
    if (raw.empty()) throw ParseError("empty cycle notation", 1);

    // The compact digit writing carries no separators anywhere and can only
    // describe nine elements, one per character. Everything else reads each
    // bracket as separated integer tokens.
    bool any_separator = false;
    size_t chars_total = 0;
    for (const RawCycle& rc : raw) {
        chars_total += rc.inner.size();
        for (char ch : rc.inner)
            if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
                any_separator = true;
    }
    const bool compact = !any_separator && chars_total <= 9;

    std::vector<Cycle> cycles;
    int total = 0;
    for (const RawCycle& rc : raw) {
        std::vector<int> elems;
        if (compact) {
            for (size_t q = 0; q < rc.inner.size(); ++q) {
                char ch = rc.inner[q];
                if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
                    throw ParseError("bad digit in compact cycle",
                                     rc.position + 1 + static_cast<int>(q));
                elems.push_back(ch - '0');
            }
        } else {
            size_t q = 0;
            while (q < rc.inner.size()) {
                while (q < rc.inner.size() &&
                       (rc.inner[q] == ',' ||
                        std::isspace(static_cast<unsigned char>(rc.inner[q]))))
                    ++q;
                if (q >= rc.inner.size()) break;
                size_t end = q;
                while (end < rc.inner.size() && rc.inner[end] != ',' &&
                       !std::isspace(static_cast<unsigned char>(rc.inner[end])))
                    ++end;
                const std::string token = rc.inner.substr(q, end - q);
                elems.push_back(static_cast<int>(
                    parse_element(token, rc.position + 1 + static_cast<int>(q))));
                q = end;
            }
        }
        if (elems.empty()) throw ParseError("empty cycle", rc.position);
        total += static_cast<int>(elems.size());
        cycles.push_back(Cycle{std::move(elems)});
    }

    // Validate the partition of 1..total and canonicalize via the permutation.
    std::vector<char> seen(static_cast<size_t>(total) + 1, 0);
    for (const Cycle& c : cycles)
        for (int v : c.elements) {
            if (v < 1 || v > total)
                throw ParseError("cycle element " + std::to_string(v) +
                                     " outside 1.." + std::to_string(total),
                                 1);
            if (seen[static_cast<size_t>(v)])
                throw ParseError("repeated cycle element " + std::to_string(v), 1);
            seen[static_cast<size_t>(v)] = 1;
        }
    CycleDecomposition raw_dec{std::move(cycles)};
    return cycle_decomposition(raw_dec.to_permutation());
}

Permutation foata_forward(const Permutation& p) {
    CycleDecomposition d = cycle_decomposition(p);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(p.size()));
    for (const Cycle& c : d.cycles)
        word.insert(word.end(), c.elements.begin(), c.elements.end());
    return Permutation::from_word(std::move(word));
}

Permutation foata_inverse(const Permutation& w) {
    const int n = w.size();
    std::vector<int> word(static_cast<size_t>(n), 0);
    int segment_start = 1;
    int running_max = 0;
    auto close_segment = [&](int segment_end) {
        // w(segment_start..segment_end) is one head-first cycle.
        for (int k = segment_start; k < segment_end; ++k)
            word[static_cast<size_t>(w(k) - 1)] = w(k + 1);
        word[static_cast<size_t>(w(segment_end) - 1)] = w(segment_start);
    };
    for (int i = 1; i <= n; ++i) {
        if (w(i) > running_max) {
            if (i > 1) close_segment(i - 1);
            segment_start = i;
            running_max = w(i);
        }
    }
    close_segment(n);
    return Permutation::from_word(std::move(word));
}

int max_cycle_length(const Permutation& p) {
    return static_cast<int>(cycle_decomposition(p).max_cycle_length());
}

int cycle_head_of(const Permutation& w, int position) {
    if (position < 1 || position > w.size())
        throw std::out_of_range("position " + std::to_string(position) +
                                " out of range 1.." + std::to_string(w.size()));
    int best = 0;
    for (int i = 1; i <= position; ++i) best = std::max(best, w(i));
    return best;
}

}  // namespace theaterperm
