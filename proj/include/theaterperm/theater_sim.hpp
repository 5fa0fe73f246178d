#ifndef THEATERPERM_THEATER_SIM_HPP
#define THEATERPERM_THEATER_SIM_HPP

#include <cstdint>
#include <vector>

#include "theaterperm/permutation.hpp"

namespace theaterperm {

/// Occupancy of a row of L seats; time counts spectators seated so far and
/// always equals the number of occupied seats.
struct SeatingState {
    std::vector<bool> occupancy;
    int time = 0;

    int size() const { return static_cast<int>(occupancy.size()); }
};

SeatingState empty_row(int length);

/// The seat-choice history of one run. `choices[t-1]` is the seat taken by
/// the spectator arriving at time t. full == (every seat got taken).
struct SeatingTrace {
    std::vector<int> choices;
    bool full = false;

    bool operator==(const SeatingTrace&) const = default;
};

/// Seats a spectator entering from the left can still reach: empty seats x
/// with no fully occupied block of b consecutive seats strictly before x.
/// Returned in increasing order.
std::vector<int> reachable_seats(const SeatingState& state, int b);

/// Every choice sequence that fills the row, found by depth-first search over
/// all reachable-seat choices. Traces come out sorted lexicographically by
/// their choice words. Lengths above kSeatingSearchCap are refused.
std::vector<SeatingTrace> exhaustive_full_occupancy(int length, int b);

/// Occupancy-time encoding of a full trace: seat i was taken at time s(i).
/// This is the inverse of the choice word. Throws std::logic_error unless
/// the trace is full.
Permutation trace_to_time_permutation(const SeatingTrace& trace);

/// One seeded run: each spectator picks uniformly among the reachable seats
/// (policy "uniform_reachable"); the run ends at full occupancy or jams at
/// the first spectator with nowhere to sit.
SeatingTrace simulate_random(int length, int b, std::uint64_t seed);

/// Aggregate of `trials` runs with seeds seed, seed+1, ..., seed+trials-1.
struct MonteCarloSummary {
    std::uint64_t trials = 0;
    std::uint64_t full_count = 0;
    double mean_seated_fraction = 0.0;
    std::uint64_t seed = 0;
};

MonteCarloSummary simulate_batch(int length, int b, std::uint64_t seed,
                                 std::uint64_t trials);

}  // namespace theaterperm

#endif  // THEATERPERM_THEATER_SIM_HPP
