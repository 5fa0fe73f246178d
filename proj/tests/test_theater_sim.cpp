#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "theaterperm/anomaly.hpp"
#include "theaterperm/counting.hpp"
#include "theaterperm/errors.hpp"
#include "theaterperm/theater_sim.hpp"

using namespace theaterperm;

namespace {

SeatingState row_with(std::vector<bool> occ) {
    SeatingState s;
    s.time = static_cast<int>(std::count(occ.begin(), occ.end(), true));
    s.occupancy = std::move(occ);
    return s;
}

template <typename Fn>
void for_each_perm(int length, Fn&& fn) {
    std::vector<int> word(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) word[static_cast<size_t>(i)] = i + 1;
    do {
        fn(Permutation::from_word(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace

TEST_CASE("reachability under the blocking rule") {
    CHECK(reachable_seats(row_with({true, true, false}), 2).empty());
    CHECK(reachable_seats(empty_row(3), 2) == std::vector<int>{1, 2, 3});
    CHECK(reachable_seats(row_with({true, false, true}), 2) == std::vector<int>{2});
    // b=1: anything right of the first occupied seat is cut off.
    CHECK(reachable_seats(row_with({false, true, false, false}), 1) ==
          std::vector<int>{1});
    CHECK(reachable_seats(row_with({false, false, true, false}), 1) ==
          std::vector<int>{1, 2});
}

TEST_CASE("exhaustive search at L=3, b=2 finds exactly the four full orders") {
    const std::vector<SeatingTrace> traces = exhaustive_full_occupancy(3, 2);
    REQUIRE(traces.size() == 4);
    const std::vector<std::vector<int>> expected = {
        {1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (size_t k = 0; k < 4; ++k) {
        CHECK(traces[k].choices == expected[k]);
        CHECK(traces[k].full);
    }
}

TEST_CASE("exhaustive search corner cases") {
    const std::vector<SeatingTrace> tight = exhaustive_full_occupancy(3, 1);
    REQUIRE(tight.size() == 1);
    CHECK(tight[0].choices == std::vector<int>{3, 2, 1});

    CHECK(exhaustive_full_occupancy(4, 4).size() == 24);
    CHECK(exhaustive_full_occupancy(4, 9).size() == 24);
    CHECK(exhaustive_full_occupancy(1, 1).size() == 1);

    CHECK_THROWS_AS(exhaustive_full_occupancy(9, 2), InfeasibleSizeError);
    CHECK_THROWS_AS(exhaustive_full_occupancy(3, 0), std::invalid_argument);
}

TEST_CASE("occupancy-time encoding") {
    CHECK(trace_to_time_permutation({{1, 3, 2}, true}) ==
          Permutation::from_word({1, 3, 2}));
    CHECK(trace_to_time_permutation({{3, 1, 2}, true}) ==
          Permutation::from_word({2, 3, 1}));
    CHECK(trace_to_time_permutation({{1, 2, 3, 4}, true}) == Permutation::identity(4));
    CHECK_THROWS_AS(trace_to_time_permutation({{1, 2}, false}), std::logic_error);
}

TEST_CASE("random runs jam exactly when the rule says so") {
    // b=1: a first pick of seat 1 blocks both other seats.
    bool saw_jam_after_one = false;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        SeatingTrace t = simulate_random(3, 1, seed);
        REQUIRE(!t.choices.empty());
        if (t.choices[0] == 1) {
            CHECK_FALSE(t.full);
            CHECK(t.choices.size() == 1);
            saw_jam_after_one = true;
        }
        if (t.choices[0] == 3 && t.choices.size() > 1 && t.choices[1] == 2) CHECK(t.full);
    }
    CHECK(saw_jam_after_one);

    // b >= L never blocks.
    for (std::uint64_t seed = 0; seed < 32; ++seed)
        CHECK(simulate_random(4, 4, seed).full);
}

TEST_CASE("random full orders always come from the exhaustive set") {
    std::set<std::vector<int>> allowed;
    for (const SeatingTrace& t : exhaustive_full_occupancy(3, 2)) allowed.insert(t.choices);
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        SeatingTrace t = simulate_random(3, 2, seed);
        if (t.full) CHECK(allowed.count(t.choices) == 1);
    }
}

TEST_CASE("runs are reproducible and batch summaries add up") {
    const SeatingTrace a = simulate_random(12, 2, 77);
    const SeatingTrace b = simulate_random(12, 2, 77);
    CHECK(a == b);

    const MonteCarloSummary s = simulate_batch(6, 2, 5, 500);
    CHECK(s.trials == 500);
    CHECK(s.full_count <= 500);
    CHECK(s.mean_seated_fraction > 0.0);
    CHECK(s.mean_seated_fraction <= 1.0);
    const MonteCarloSummary again = simulate_batch(6, 2, 5, 500);
    CHECK(again.full_count == s.full_count);
    CHECK(again.mean_seated_fraction == s.mean_seated_fraction);
}

TEST_CASE("complemented occupancy times are exactly the admissible class, to L=5") {
    for (int n = 1; n <= 5; ++n) {
        for (int b = 1; b <= n; ++b) {
            std::set<std::vector<int>> via_dynamics;
            for (const SeatingTrace& t : exhaustive_full_occupancy(n, b))
                via_dynamics.insert(complement(trace_to_time_permutation(t)).word());
            std::set<std::vector<int>> admissible;
            for_each_perm(n, [&](const Permutation& p) {
                if (is_theater_admissible(p, b)) admissible.insert(p.word());
            });
            CHECK(via_dynamics == admissible);
            bool ok = false;
            CHECK(via_dynamics.size() == count_bounded_cycles(n, b).to_u64(ok));
            CHECK(ok);
        }
    }
}

TEST_CASE("reachability only shrinks along a run") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        SeatingTrace t = simulate_random(9, 2, seed);
        SeatingState state = empty_row(9);
        std::vector<int> reach = reachable_seats(state, 2);
        for (int seat : t.choices) {
            CHECK(std::binary_search(reach.begin(), reach.end(), seat));
            state.occupancy[static_cast<size_t>(seat - 1)] = true;
            ++state.time;
            std::vector<int> after = reachable_seats(state, 2);
            for (int x : after) CHECK(std::binary_search(reach.begin(), reach.end(), x));
            reach = std::move(after);
        }
        if (!t.full) CHECK(reach.empty());
    }
}
