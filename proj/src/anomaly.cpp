#include "theaterperm/anomaly.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "theaterperm/foata.hpp"

namespace theaterperm {

namespace {

void check_b(int b) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
}

// Maximum (or minimum) over every window of `width` consecutive entries.
// out[k] = extremum of word[k .. k+width-1], 0-based; monotonic deque.
template <typename Better>
std::vector<int> window_extrema(const std::vector<int>& word, int width, Better better) {
    const int n = static_cast<int>(word.size());
    std::vector<int> out;
    if (width > n) return out;
    out.reserve(static_cast<size_t>(n - width + 1));
    std::deque<int> deq;  // indices, extremum at front
    for (int k = 0; k < n; ++k) {
        while (!deq.empty() && !better(word[static_cast<size_t>(deq.back())],
                                       word[static_cast<size_t>(k)]))
            deq.pop_back();
        deq.push_back(k);
        if (deq.front() <= k - width) deq.pop_front();
        if (k >= width - 1) out.push_back(word[static_cast<size_t>(deq.front())]);
    }
    return out;
}

std::vector<int> window_maxima(const std::vector<int>& word, int width) {
    return window_extrema(word, width, [](int a, int b) { return a > b; });
}

std::vector<int> window_minima(const std::vector<int>& word, int width) {
    return window_extrema(word, width, [](int a, int b) { return a < b; });
}

}  // namespace

std::vector<AnomalyWitness> find_b_anomaly_all(const Permutation& w, int b) {
    check_b(b);
    const int n = w.size();
    std::vector<AnomalyWitness> out;
    if (b > n - 1) return out;  // no block with a nonempty prefix fits

    const std::vector<int>& word = w.word();
    const std::vector<int> wmax = window_maxima(word, b);  // wmax[i-1] = max of positions i..i+b-1
    int prefix_max = 0;
    int prefix_argmax = 0;
    for (int i = 1; i + b <= n; ++i) {
        if (w(i) > prefix_max) {
            prefix_max = w(i);
            prefix_argmax = i;
        }
        const int block_max = wmax[static_cast<size_t>(i)];  // block i+1..i+b
        if (prefix_max > block_max)
            out.push_back(AnomalyWitness{i, b, prefix_argmax, prefix_max});
    }
    return out;
}

std::optional<AnomalyWitness> find_b_anomaly_first(const Permutation& w, int b) {
    check_b(b);
    const int n = w.size();
    if (b > n - 1) return std::nullopt;

    const std::vector<int>& word = w.word();
    const std::vector<int> wmax = window_maxima(word, b);
    int prefix_max = 0;
    int prefix_argmax = 0;
    for (int i = 1; i + b <= n; ++i) {
        if (w(i) > prefix_max) {
            prefix_max = w(i);
            prefix_argmax = i;
        }
        if (prefix_max > wmax[static_cast<size_t>(i)])
            return AnomalyWitness{i, b, prefix_argmax, prefix_max};
    }
    return std::nullopt;
}

bool has_b_anomaly(const Permutation& w, int b) {
    return find_b_anomaly_first(w, b).has_value();
}

std::vector<AnomalyWitness> find_b_anomaly_all_naive(const Permutation& w, int b) {
    check_b(b);
    const int n = w.size();
    std::vector<AnomalyWitness> out;
    for (int i = 1; i + b <= n; ++i) {
        int block_max = 0;
        for (int k = 1; k <= b; ++k) block_max = std::max(block_max, w(i + k));
        int best_value = 0, best_pos = 0;
        for (int j = 1; j <= i; ++j) {
            if (w(j) > block_max && w(j) > best_value) {
                best_value = w(j);
                best_pos = j;
            }
        }
        if (best_pos != 0) out.push_back(AnomalyWitness{i, b, best_pos, best_value});
    }
    return out;
}

std::optional<AnomalyWitness> find_b_anomaly_first_naive(const Permutation& w, int b) {
    auto all = find_b_anomaly_all_naive(w, b);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::optional<TheaterViolation> find_theater_violation(const Permutation& s, int b) {
    check_b(b);
    const int n = s.size();
    if (b >= n) return std::nullopt;  // j+b < i <= L is unsatisfiable

    const std::vector<int>& word = s.word();
    // wmin[j] = min of s(j+1..j+b), j = 0..n-b.
    const std::vector<int> wmin = window_minima(word, b);
    // A victim at position i exists iff some earlier full block has all its
    // letters above s(i): max over j <= i-b-1 of wmin[j] > s(i).
    int running = 0;
    for (int i = b + 1; i <= n; ++i) {
        running = std::max(running, wmin[static_cast<size_t>(i - b - 1)]);
        if (running > s(i)) {
            for (int j = 0; j + b < i; ++j)
                if (wmin[static_cast<size_t>(j)] > s(i)) return TheaterViolation{j, i};
        }
    }
    return std::nullopt;
}

bool is_theater_admissible(const Permutation& s, int b) {
    return !find_theater_violation(s, b).has_value();
}

std::optional<TheaterViolation> find_theater_violation_naive(const Permutation& s, int b) {
    check_b(b);
    const int n = s.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j + b < i; ++j) {
            bool all_above = true;
            for (int k = 1; k <= b; ++k)
                if (s(j + k) <= s(i)) {
                    all_above = false;
                    break;
                }
            if (all_above) return TheaterViolation{j, i};
        }
    }
    return std::nullopt;
}

bool is_theater_admissible_naive(const Permutation& s, int b) {
    return !find_theater_violation_naive(s, b).has_value();
}

Permutation bounded_to_theater(const Permutation& s) {
    return rotate180(foata_forward(s));
}

Permutation theater_to_bounded(const Permutation& s) {
    return foata_inverse(rotate180(s));
}

}  // namespace theaterperm
