// Acceptance suite: every release gate in one binary, one verdict line each.
// argv[1] is the path to the CLI binary; the heavier sweeps run in-process
// against the core library.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "json.hpp"
#include "theaterperm/anomaly.hpp"
#include "theaterperm/counting.hpp"
#include "theaterperm/foata.hpp"
#include "theaterperm/permutation.hpp"
#include "theaterperm/rng.hpp"
#include "theaterperm/theater_sim.hpp"

using json = nlohmann::json;
using namespace theaterperm;

namespace {

std::string g_cli;
int g_failures = 0;

void verdict(int number, const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
        std::printf("PASS criterion %d: %s\n", number, name.c_str());
    } else {
        std::printf("FAIL criterion %d: %s -- %s\n", number, name.c_str(), detail.c_str());
        ++g_failures;
    }
}

template <typename Fn>
void for_each_perm(int length, Fn&& fn) {
    std::vector<int> word(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) word[static_cast<size_t>(i)] = i + 1;
    do {
        fn(Permutation::from_word(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

// 1. Worked example through the CLI, exact strings.
void criterion_1() {
    std::string detail;
    bool ok = true;
    auto want = [&](const std::string& args, const std::string& expected) {
        const CliResult r = run_cli(g_cli, args);
        if (r.exit_code != 0 || r.out != expected + "\n") {
            ok = false;
            detail += args + " gave \"" + r.out + "\"; ";
        }
    };
    want("foata 359724681", "527648913");
    want("foata-inv 527648913", "359724681");
    want("cycles 359724681", "[5 2][7 6 4][8][9 1 3]");
    verdict(1, "golden Foata example", ok, detail);
}

// 2. The 246 block is reported as a 3-anomaly with blocker 9, exact positions.
void criterion_2() {
    const CliResult r = run_cli(g_cli, "anomaly 359724681 --b 3 --all --format json");
    bool ok = r.exit_code == 0;
    std::string detail = "exit " + std::to_string(r.exit_code);
    if (ok) {
        const json j = json::parse(r.out, nullptr, false);
        ok = !j.is_discarded() && j.value("found", false);
        bool exact = false;
        if (ok)
            for (const auto& w : j["witnesses"])
                if (w["block_positions"] == json::array({5, 6, 7}) &&
                    w["block_letters"] == json::array({2, 4, 6}) &&
                    w["blocker_value"] == 9)
                    exact = true;
        ok = ok && exact;
        if (!exact) detail = "no witness with block 5..7 under blocker 9";
    }
    // The default (earliest-block) report must itself be a sound witness.
    if (ok) {
        const Permutation w = parse_permutation("359724681");
        auto first = find_b_anomaly_first(w, 3);
        ok = first.has_value() && first == find_b_anomaly_first_naive(w, 3);
        if (!ok) detail = "first-mode witness failed the naive recheck";
    }
    verdict(2, "golden 3-anomaly with exact positions", ok, detail);
}

// 3. Cycle length >= b+1 iff the Foata image has a b-anomaly, all of S_1..S_7.
void criterion_3() {
    std::string detail;
    for (int n = 1; n <= 7 && detail.empty(); ++n) {
        for_each_perm(n, [&](const Permutation& s) {
            if (!detail.empty()) return;
            const Permutation w = foata_forward(s);
            const int longest = max_cycle_length(s);
            for (int b = 1; b <= n; ++b) {
                if ((longest >= b + 1) != has_b_anomaly(w, b)) {
                    detail = "s=" + to_string(s, SerializeStyle::Auto) +
                             " b=" + std::to_string(b);
                    return;
                }
            }
        });
    }
    verdict(3, "cycle-length / anomaly equivalence on S_1..S_7", detail.empty(), detail);
}

// 4. Four counting routes agree for all L <= 7, b <= L; spot rows pinned.
void criterion_4() {
    std::string detail;
    for (int n = 1; n <= 7 && detail.empty(); ++n) {
        for (int b = 1; b <= n; ++b) {
            const BigUint rec = count_bounded_cycles(n, b);
            const BigUint bounded = count_class_brute(n, b, PermClass::BoundedCycles);
            const BigUint adm = count_class_brute(n, b, PermClass::TheaterAdmissible);
            const BigUint free = count_class_brute(n, b, PermClass::AnomalyFree);
            if (!(rec == bounded && rec == adm && rec == free)) {
                detail = "L=" + std::to_string(n) + " b=" + std::to_string(b) + ": " +
                         rec.to_decimal() + "/" + bounded.to_decimal() + "/" +
                         adm.to_decimal() + "/" + free.to_decimal();
                break;
            }
        }
    }
    if (detail.empty()) {
        const std::vector<std::uint64_t> row2 = {1, 2, 4, 10, 26, 76, 232};
        for (int n = 1; n <= 7; ++n) {
            bool ok = false;
            if (count_bounded_cycles(n, 2).to_u64(ok) != row2[static_cast<size_t>(n - 1)] ||
                !ok) {
                detail = "D(" + std::to_string(n) + ",2) off";
                break;
            }
        }
        if (detail.empty() && count_bounded_cycles(5, 3).to_decimal() != "66")
            detail = "D(5,3) != 66";
    }
    verdict(4, "central cardinality identity, four routes", detail.empty(), detail);
}

// 5. bounded_to_theater bijects the bounded class onto the admissible class.
void criterion_5() {
    std::string detail;
    for (int n = 1; n <= 7 && detail.empty(); ++n) {
        for (int b = 1; b <= n && detail.empty(); ++b) {
            std::set<std::vector<int>> image, admissible;
            std::size_t bounded_size = 0;
            bool inverse_ok = true;
            for_each_perm(n, [&](const Permutation& p) {
                if (max_cycle_length(p) <= b) {
                    ++bounded_size;
                    const Permutation t = bounded_to_theater(p);
                    image.insert(t.word());
                    if (theater_to_bounded(t) != p) inverse_ok = false;
                }
                if (is_theater_admissible(p, b)) admissible.insert(p.word());
            });
            if (!inverse_ok)
                detail = "inverse failed at L=" + std::to_string(n) + " b=" +
                         std::to_string(b);
            else if (image.size() != bounded_size)
                detail = "map not injective at L=" + std::to_string(n) + " b=" +
                         std::to_string(b);
            else if (image != admissible)
                detail = "image != admissible at L=" + std::to_string(n) + " b=" +
                         std::to_string(b);
        }
    }
    verdict(5, "bounded-cycle class bijects onto admissible class", detail.empty(), detail);
}

// 6. Rotation duality plus the two involutions, all of S_1..S_7.
void criterion_6() {
    std::string detail;
    for (int n = 1; n <= 7 && detail.empty(); ++n) {
        for_each_perm(n, [&](const Permutation& w) {
            if (!detail.empty()) return;
            const Permutation r = rotate180(w);
            if (rotate180(r) != w || complement(complement(w)) != w) {
                detail = "involution broke at " + to_string(w, SerializeStyle::Auto);
                return;
            }
            for (int b = 1; b <= n; ++b) {
                if (has_b_anomaly(w, b) == is_theater_admissible(r, b)) {
                    detail = "w=" + to_string(w, SerializeStyle::Auto) +
                             " b=" + std::to_string(b);
                    return;
                }
            }
        });
    }
    verdict(6, "rotation duality and involutions on S_1..S_7", detail.empty(), detail);
}

// 7. Seating dynamics reproduce the admissible class for L <= 6.
void criterion_7() {
    std::string detail;
    for (int n = 1; n <= 6 && detail.empty(); ++n) {
        for (int b = 1; b <= n && detail.empty(); ++b) {
            const std::vector<SeatingTrace> traces = exhaustive_full_occupancy(n, b);
            std::set<std::vector<int>> via_dynamics;
            for (const SeatingTrace& t : traces)
                via_dynamics.insert(complement(trace_to_time_permutation(t)).word());
            std::set<std::vector<int>> admissible;
            for_each_perm(n, [&](const Permutation& p) {
                if (is_theater_admissible(p, b)) admissible.insert(p.word());
            });
            bool ok = false;
            if (via_dynamics != admissible)
                detail = "set mismatch at L=" + std::to_string(n) + " b=" +
                         std::to_string(b);
            else if (traces.size() != count_bounded_cycles(n, b).to_u64(ok) || !ok)
                detail = "trace count != D at L=" + std::to_string(n) + " b=" +
                         std::to_string(b);
        }
    }
    if (detail.empty()) {
        std::vector<std::vector<int>> orders;
        for (const SeatingTrace& t : exhaustive_full_occupancy(3, 2))
            orders.push_back(t.choices);
        const std::vector<std::vector<int>> expected = {
            {1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
        if (orders != expected) detail = "full seat orders at (3,2) differ";
    }
    verdict(7, "seating dynamics match the admissibility predicate", detail.empty(),
            detail);
}

// 8. Sampler statistics at (5,2): 10,000 seeded draws, 3-sigma uniformity.
void criterion_8() {
    std::string detail;
    const int trials = 10000;
    std::map<std::vector<int>, int> freq;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        const Permutation p = sample_bounded(5, 2, seed);
        if (max_cycle_length(p) > 2) {
            detail = "draw outside the class at seed " + std::to_string(seed);
            break;
        }
        ++freq[p.word()];
    }
    bool ok = false;
    const std::uint64_t classes = count_bounded_cycles(5, 2).to_u64(ok);  // 26
    if (detail.empty() && (!ok || freq.size() != classes))
        detail = "hit " + std::to_string(freq.size()) + " of " + std::to_string(classes) +
                 " involutions";
    if (detail.empty()) {
        const double p = 1.0 / static_cast<double>(classes);
        const double mean = trials * p;
        const double sigma = std::sqrt(trials * p * (1.0 - p));
        for (const auto& [word, count] : freq) {
            if (std::abs(count - mean) > 3.0 * sigma) {
                detail = "frequency " + std::to_string(count) + " outside " +
                         std::to_string(mean) + " +- 3*" + std::to_string(sigma);
                break;
            }
        }
    }
    if (detail.empty()) {
        const CliResult a = run_cli(g_cli, "sample --length 5 --b 2 --seed 7 --trials 20");
        const CliResult b = run_cli(g_cli, "sample --length 5 --b 2 --seed 7 --trials 20");
        if (a.out != b.out || a.exit_code != 0)
            detail = "fixed seed did not reproduce byte-identical output";
    }
    verdict(8, "sampler uniformity within 3 sigma and reproducibility", detail.empty(),
            detail);
}

// 9. Sliding-window detector == naive scan on S_7; large random spot checks.
void criterion_9() {
    std::string detail;
    for_each_perm(7, [&](const Permutation& w) {
        if (!detail.empty()) return;
        for (int b = 1; b <= 7; ++b) {
            if (find_b_anomaly_first(w, b) != find_b_anomaly_first_naive(w, b) ||
                find_b_anomaly_all(w, b) != find_b_anomaly_all_naive(w, b)) {
                detail = "kernels disagree at w=" + to_string(w, SerializeStyle::Auto) +
                         " b=" + std::to_string(b);
                return;
            }
        }
    });

    if (detail.empty()) {
        const int big = 10000;
        SeededRng rng(2024);
        std::vector<int> word(big);
        for (int trial = 0; trial < 10000 && detail.empty(); ++trial) {
            for (int i = 0; i < big; ++i) word[static_cast<size_t>(i)] = i + 1;
            for (int i = big - 1; i > 0; --i) {
                const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
                std::swap(word[static_cast<size_t>(i)], word[static_cast<size_t>(j)]);
            }
            const Permutation w = Permutation::from_word(word);
            const int b =
                1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(big - 1)));
            const auto witness = find_b_anomaly_first(w, b);
            if (witness) {
                // Re-derive the block maximum and the best prefix letter the
                // slow way and confirm the reported witness.
                int block_max = 0;
                for (int k = 1; k <= b; ++k)
                    block_max = std::max(block_max, w(witness->block_start + k));
                int best = 0, best_pos = 0;
                for (int j = 1; j <= witness->block_start; ++j)
                    if (w(j) > block_max && w(j) > best) {
                        best = w(j);
                        best_pos = j;
                    }
                if (best_pos == 0 || witness->blocker_value != best ||
                    witness->blocker_position != best_pos)
                    detail = "witness failed naive recheck at trial " +
                             std::to_string(trial);
                // Blocks before the reported one must be anomaly-free; sweep
                // them all when cheap, otherwise probe a random sample.
                std::vector<int> earlier;
                const long long sweep_cost =
                    static_cast<long long>(witness->block_start) * b;
                if (sweep_cost <= 1000000) {
                    for (int i = 1; i < witness->block_start; ++i) earlier.push_back(i);
                } else if (witness->block_start > 1) {
                    for (int probe = 0; probe < 16; ++probe)
                        earlier.push_back(1 + static_cast<int>(rng.below(
                                                  static_cast<std::uint64_t>(
                                                      witness->block_start - 1))));
                }
                for (int i : earlier) {
                    if (!detail.empty()) break;
                    int prefix_max = 0;
                    for (int j = 1; j <= i; ++j) prefix_max = std::max(prefix_max, w(j));
                    int bm = 0;
                    for (int k = 1; k <= b; ++k) bm = std::max(bm, w(i + k));
                    if (prefix_max > bm)
                        detail = "earlier block missed at trial " + std::to_string(trial);
                }
            } else {
                // Spot-check five random block starts against the definition.
                for (int probe = 0; probe < 5 && b <= big - 1; ++probe) {
                    const int i =
                        1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(big - b)));
                    int prefix_max = 0;
                    for (int j = 1; j <= i; ++j) prefix_max = std::max(prefix_max, w(j));
                    int block_max = 0;
                    for (int k = 1; k <= b; ++k) block_max = std::max(block_max, w(i + k));
                    if (prefix_max > block_max) {
                        detail = "missed anomaly at trial " + std::to_string(trial);
                        break;
                    }
                }
            }
        }
    }
    verdict(9, "detector equivalence on S_7 and random large words", detail.empty(),
            detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 2;
    }
    g_cli = argv[1];

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
}
