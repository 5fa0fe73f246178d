#include "theaterperm/theater_sim.hpp"

#include <stdexcept>

#include "theaterperm/counting.hpp"
#include "theaterperm/errors.hpp"
#include "theaterperm/rng.hpp"

namespace theaterperm {

namespace {

void check_b(int b) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
}

// Rightmost seat still in reach, or L when no occupied run of length >= b
// exists: seats strictly beyond the end of the leftmost such run are cut off.
int reach_limit(const SeatingState& state, int b) {
    const int n = state.size();
    int run = 0;
    for (int x = 1; x <= n; ++x) {
        run = state.occupancy[static_cast<size_t>(x - 1)] ? run + 1 : 0;
        if (run >= b) return x;
    }
    return n;
}

}  // namespace

SeatingState empty_row(int length) {
    if (length < 1) throw std::invalid_argument("length must be positive");
    return SeatingState{std::vector<bool>(static_cast<size_t>(length), false), 0};
}

std::vector<int> reachable_seats(const SeatingState& state, int b) {
    check_b(b);
    const int limit = reach_limit(state, b);
    std::vector<int> seats;
    for (int x = 1; x <= limit; ++x)
        if (!state.occupancy[static_cast<size_t>(x - 1)]) seats.push_back(x);
    return seats;
}

namespace {

void search_full(SeatingState& state, int b, std::vector<int>& choices,
                 std::vector<SeatingTrace>& out) {
    if (state.time == state.size()) {
        out.push_back(SeatingTrace{choices, true});
        return;
    }
    // reachable_seats returns increasing seats, so the DFS emits traces in
    // lexicographic order of their choice words.
    for (int seat : reachable_seats(state, b)) {
        state.occupancy[static_cast<size_t>(seat - 1)] = true;
        ++state.time;
        choices.push_back(seat);
        search_full(state, b, choices, out);
        choices.pop_back();
        --state.time;
        state.occupancy[static_cast<size_t>(seat - 1)] = false;
    }
}

}  // namespace

std::vector<SeatingTrace> exhaustive_full_occupancy(int length, int b) {
    check_b(b);
    if (length < 1) throw std::invalid_argument("length must be positive");
    if (length > kSeatingSearchCap)
        throw InfeasibleSizeError("exhaustive seating search refused: length " +
                                  std::to_string(length) + " exceeds cap " +
                                  std::to_string(kSeatingSearchCap));
    SeatingState state = empty_row(length);
    std::vector<int> choices;
    std::vector<SeatingTrace> out;
    search_full(state, b, choices, out);
    return out;
}

Permutation trace_to_time_permutation(const SeatingTrace& trace) {
    if (!trace.full)
        throw std::logic_error("occupancy-time permutation requires a full trace");
    return invert(Permutation::from_word(trace.choices));
}

SeatingTrace simulate_random(int length, int b, std::uint64_t seed) {
    check_b(b);
    if (length < 1) throw std::invalid_argument("length must be positive");
    SeededRng rng(seed);
    SeatingState state = empty_row(length);
    SeatingTrace trace;
    for (;;) {
        std::vector<int> options = reachable_seats(state, b);
        if (options.empty()) break;  // jammed
        const int seat = options[static_cast<size_t>(rng.below(options.size()))];
        state.occupancy[static_cast<size_t>(seat - 1)] = true;
        ++state.time;
        trace.choices.push_back(seat);
        if (state.time == length) {
            trace.full = true;
            break;
        }
    }
    return trace;
}

MonteCarloSummary simulate_batch(int length, int b, std::uint64_t seed,
                                 std::uint64_t trials) {
    MonteCarloSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    std::uint64_t seated_total = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SeatingTrace trace = simulate_random(length, b, seed + t);
        if (trace.full) ++summary.full_count;
        seated_total += trace.choices.size();
    }
    summary.mean_seated_fraction =
        trials == 0 ? 0.0
                    : static_cast<double>(seated_total) /
                          (static_cast<double>(trials) * static_cast<double>(length));
    return summary;
}

}  // namespace theaterperm
