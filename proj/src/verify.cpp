#include "theaterperm/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "theaterperm/anomaly.hpp"
#include "theaterperm/counting.hpp"
#include "theaterperm/foata.hpp"
#include "theaterperm/permutation.hpp"
#include "theaterperm/theater_sim.hpp"

namespace theaterperm {

namespace {

template <typename Fn>
void for_each_perm(int length, Fn&& fn) {
    std::vector<int> word(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) word[static_cast<size_t>(i)] = i + 1;
    do {
        fn(Permutation::from_word(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

std::string perm_str(const Permutation& p) { return to_string(p, SerializeStyle::Auto); }

// Each checker returns an empty string on success or the first counterexample.

std::string check_serialize_roundtrip(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& p) {
            if (!bad.empty()) return;
            if (parse_permutation(to_string(p, SerializeStyle::Comma)) != p)
                bad = "comma round trip broke at " + perm_str(p);
            else if (n <= 9 && parse_permutation(to_string(p, SerializeStyle::Compact)) != p)
                bad = "compact round trip broke at " + perm_str(p);
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_involutions(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& p) {
            if (!bad.empty()) return;
            if (rotate180(rotate180(p)) != p)
                bad = "rotate180 twice != id at " + perm_str(p);
            else if (complement(complement(p)) != p)
                bad = "complement twice != id at " + perm_str(p);
            else if (rotate180(p) != complement(reverse(p)))
                bad = "rotate180 != complement(reverse) at " + perm_str(p);
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_inverse(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        if (invert(Permutation::identity(n)) != Permutation::identity(n))
            return "invert(identity) != identity at L=" + std::to_string(n);
        std::string bad;
        for_each_perm(n, [&](const Permutation& p) {
            if (!bad.empty()) return;
            const Permutation q = invert(p);
            if (invert(q) != p) bad = "invert twice != id at " + perm_str(p);
            for (int i = 1; i <= n && bad.empty(); ++i)
                if (q(p(i)) != i) bad = "q(p(i)) != i at " + perm_str(p);
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_foata_roundtrip(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& p) {
            if (!bad.empty()) return;
            if (foata_inverse(foata_forward(p)) != p)
                bad = "inverse(forward) != id at " + perm_str(p);
            else if (foata_forward(foata_inverse(p)) != p)
                bad = "forward(inverse) != id at " + perm_str(p);
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_cycle_head_lookup(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& w) {
            if (!bad.empty()) return;
            const CycleDecomposition dec = cycle_decomposition(foata_inverse(w));
            std::vector<int> head_of_letter(static_cast<size_t>(n) + 1, 0);
            for (const Cycle& c : dec.cycles)
                for (int v : c.elements) head_of_letter[static_cast<size_t>(v)] = c.head();
            for (int k = 1; k <= n; ++k) {
                if (cycle_head_of(w, k) != head_of_letter[static_cast<size_t>(w(k))]) {
                    bad = "cycle head mismatch at " + perm_str(w) + " position " +
                          std::to_string(k);
                    return;
                }
            }
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_canonical_decomposition(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& p) {
            if (!bad.empty()) return;
            const CycleDecomposition dec = cycle_decomposition(p);
            std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
            int prev_head = 0;
            for (const Cycle& c : dec.cycles) {
                if (c.elements.empty() ||
                    c.head() != *std::max_element(c.elements.begin(), c.elements.end())) {
                    bad = "cycle not head-first at " + perm_str(p);
                    return;
                }
                if (c.head() <= prev_head) {
                    bad = "cycle heads not increasing at " + perm_str(p);
                    return;
                }
                prev_head = c.head();
                for (int v : c.elements) seen[static_cast<size_t>(v)] = 1;
                for (size_t k = 0; k < c.elements.size(); ++k)
                    if (p(c.elements[k]) != c.elements[(k + 1) % c.elements.size()]) {
                        bad = "cycle does not follow the permutation at " + perm_str(p);
                        return;
                    }
            }
            for (int v = 1; v <= n; ++v)
                if (!seen[static_cast<size_t>(v)]) {
                    bad = "element " + std::to_string(v) + " missing at " + perm_str(p);
                    return;
                }
            if (dec.to_permutation() != p) bad = "decomposition round trip at " + perm_str(p);
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_cycle_lengths_under_inverse(int max_len) {
    auto lengths = [](const Permutation& p) {
        std::vector<size_t> ls;
        for (const Cycle& c : cycle_decomposition(p).cycles) ls.push_back(c.length());
        std::sort(ls.begin(), ls.end());
        return ls;
    };
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& p) {
            if (!bad.empty()) return;
            if (lengths(p) != lengths(invert(p)))
                bad = "cycle length multiset changed by invert at " + perm_str(p);
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_cycle_bound_vs_anomaly(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& s) {
            if (!bad.empty()) return;
            const Permutation w = foata_forward(s);
            const int longest = max_cycle_length(s);
            for (int b = 1; b <= n; ++b) {
                if ((longest >= b + 1) != has_b_anomaly(w, b)) {
                    bad = "equivalence broke at s=" + perm_str(s) + " b=" + std::to_string(b);
                    return;
                }
            }
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_rotation_duality(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& w) {
            if (!bad.empty()) return;
            const Permutation r = rotate180(w);
            for (int b = 1; b <= n; ++b) {
                if (has_b_anomaly(w, b) == is_theater_admissible(r, b)) {
                    bad = "duality broke at w=" + perm_str(w) + " b=" + std::to_string(b);
                    return;
                }
            }
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_bijection(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        // Pointwise inverses on the whole group.
        std::string bad;
        for_each_perm(n, [&](const Permutation& p) {
            if (!bad.empty()) return;
            if (theater_to_bounded(bounded_to_theater(p)) != p)
                bad = "inverse composition != id at " + perm_str(p);
            else if (bounded_to_theater(theater_to_bounded(p)) != p)
                bad = "forward composition != id at " + perm_str(p);
        });
        if (!bad.empty()) return bad;

        for (int b = 1; b <= n; ++b) {
            std::set<std::vector<int>> image;
            std::set<std::vector<int>> admissible;
            for_each_perm(n, [&](const Permutation& p) {
                if (max_cycle_length(p) <= b)
                    image.insert(bounded_to_theater(p).word());
                if (is_theater_admissible(p, b)) admissible.insert(p.word());
            });
            if (image != admissible)
                return "image of bounded class != admissible class at L=" +
                       std::to_string(n) + " b=" + std::to_string(b);
        }
    }
    return {};
}

std::string check_anomaly_nesting(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& w) {
            if (!bad.empty()) return;
            for (int b = 1; b <= n && bad.empty(); ++b) {
                if (!has_b_anomaly(w, b)) continue;
                for (int smaller = 1; smaller < b; ++smaller)
                    if (!has_b_anomaly(w, smaller)) {
                        bad = "nesting broke at w=" + perm_str(w) + " b=" +
                              std::to_string(b) + " b'=" + std::to_string(smaller);
                        return;
                    }
            }
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string recheck_witness(const Permutation& w, const AnomalyWitness& a) {
    const int n = w.size();
    if (a.block_start < 1 || a.block_start + a.b > n) return "block out of range";
    if (a.blocker_position < 1 || a.blocker_position > a.block_start)
        return "blocker not left of block";
    int block_max = 0;
    for (int k = 1; k <= a.b; ++k) block_max = std::max(block_max, w(a.block_start + k));
    if (w(a.blocker_position) != a.blocker_value) return "blocker value mismatch";
    if (a.blocker_value <= block_max) return "blocker does not dominate block";
    // Maximal dominating letter: no prefix letter above the block may exceed it.
    for (int j = 1; j <= a.block_start; ++j)
        if (w(j) > block_max && w(j) > a.blocker_value) return "blocker not maximal";
    return {};
}

std::string recheck_violation(const Permutation& s, int b, const TheaterViolation& v) {
    if (v.block_start < 0 || v.block_start + b >= v.victim_position)
        return "block not strictly before victim";
    if (v.victim_position > s.size()) return "victim out of range";
    for (int k = 1; k <= b; ++k)
        if (s(v.block_start + k) <= s(v.victim_position)) return "block letter not above victim";
    return {};
}

std::string check_witness_soundness(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& w) {
            if (!bad.empty()) return;
            for (int b = 1; b <= n && bad.empty(); ++b) {
                for (const AnomalyWitness& a : find_b_anomaly_all(w, b)) {
                    std::string err = recheck_witness(w, a);
                    if (!err.empty()) {
                        bad = err + " at w=" + perm_str(w) + " b=" + std::to_string(b);
                        break;
                    }
                }
                if (auto v = find_theater_violation(w, b)) {
                    std::string err = recheck_violation(w, b, *v);
                    if (!err.empty())
                        bad = err + " at s=" + perm_str(w) + " b=" + std::to_string(b);
                }
            }
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_detector_agreement(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        std::string bad;
        for_each_perm(n, [&](const Permutation& w) {
            if (!bad.empty()) return;
            for (int b = 1; b <= n && bad.empty(); ++b) {
                if (find_b_anomaly_first(w, b) != find_b_anomaly_first_naive(w, b) ||
                    find_b_anomaly_all(w, b) != find_b_anomaly_all_naive(w, b))
                    bad = "anomaly kernels disagree at w=" + perm_str(w) + " b=" +
                          std::to_string(b);
                else if (find_theater_violation(w, b) != find_theater_violation_naive(w, b))
                    bad = "admissibility kernels disagree at s=" + perm_str(w) + " b=" +
                          std::to_string(b);
            }
        });
        if (!bad.empty()) return bad;
    }
    return {};
}

std::string check_counting_identity(int max_len) {
    for (int n = 1; n <= max_len; ++n) {
        for (int b = 1; b <= n; ++b) {
            const BigUint rec = count_bounded_cycles(n, b);
            const BigUint brute = count_class_brute(n, b, PermClass::BoundedCycles);
            const BigUint adm = count_class_brute(n, b, PermClass::TheaterAdmissible);
            const BigUint free = count_class_brute(n, b, PermClass::AnomalyFree);
            if (rec != brute || rec != adm || rec != free)
                return "counts diverge at L=" + std::to_string(n) + " b=" +
                       std::to_string(b) + ": " + rec.to_decimal() + "/" +
                       brute.to_decimal() + "/" + adm.to_decimal() + "/" +
                       free.to_decimal();
        }
    }
    return {};
}

std::string check_counting_bounds(int max_len) {
    for (int n = 0; n <= max_len; ++n) {
        if (count_bounded_cycles(n, 1) != BigUint(1))
            return "D(L,1) != 1 at L=" + std::to_string(n);
        const BigUint fact = BigUint::factorial(static_cast<unsigned>(n));
        if (count_bounded_cycles(n, std::max(n, 1)) != fact ||
            count_bounded_cycles(n, n + 3) != fact)
            return "D(L,b>=L) != L! at L=" + std::to_string(n);
        for (int b = 1; b <= n + 1; ++b) {
            const BigUint lo = count_bounded_cycles(n, b);
            const BigUint hi = count_bounded_cycles(n, b + 1);
            if (lo > hi) return "monotonicity broke at L=" + std::to_string(n);
            if ((lo == hi) != (b >= n))
                return "equality pattern broke at L=" + std::to_string(n) + " b=" +
                       std::to_string(b);
        }
    }
    return {};
}

std::string check_sampler(int max_len) {
    // Coverage: at L=4, b=2 the class has 10 members and a modest seed sweep
    // must hit them all; validity: every draw stays in the class.
    std::set<std::vector<int>> seen;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Permutation p = sample_bounded(4, 2, seed);
        if (max_cycle_length(p) > 2)
            return "sample outside class at seed " + std::to_string(seed);
        seen.insert(p.word());
    }
    bool ok = false;
    if (count_bounded_cycles(4, 2).to_u64(ok) != seen.size() || !ok)
        return "seed sweep missed involutions: hit " + std::to_string(seen.size());

    const int n = std::max(3, max_len);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Permutation p = sample_bounded(n, 3, seed);
        if (max_cycle_length(p) > 3)
            return "sample outside class at L=" + std::to_string(n) + " seed " +
                   std::to_string(seed);
        if (sample_bounded(n, 3, seed) != p)
            return "sampler not deterministic at seed " + std::to_string(seed);
    }
    return {};
}

std::string check_dynamics_correspondence(int max_len) {
    const int cap = std::min(max_len, 6);
    for (int n = 1; n <= cap; ++n) {
        for (int b = 1; b <= n; ++b) {
            const std::vector<SeatingTrace> traces = exhaustive_full_occupancy(n, b);
            std::set<std::vector<int>> via_dynamics;
            for (const SeatingTrace& t : traces)
                via_dynamics.insert(complement(trace_to_time_permutation(t)).word());
            if (via_dynamics.size() != traces.size())
                return "duplicate occupancy encodings at L=" + std::to_string(n) + " b=" +
                       std::to_string(b);
            std::set<std::vector<int>> admissible;
            for_each_perm(n, [&](const Permutation& p) {
                if (is_theater_admissible(p, b)) admissible.insert(p.word());
            });
            if (via_dynamics != admissible)
                return "dynamics set != admissible set at L=" + std::to_string(n) + " b=" +
                       std::to_string(b);
            bool ok = false;
            if (count_bounded_cycles(n, b).to_u64(ok) != traces.size() || !ok)
                return "full trace count != D(L,b) at L=" + std::to_string(n) + " b=" +
                       std::to_string(b);
        }
    }
    return {};
}

std::string check_seating_rules(int max_len) {
    const int cap = std::min(max_len, 6);
    // Replay every exhaustive trace and re-validate each prefix.
    for (int n = 1; n <= cap; ++n) {
        for (int b = 1; b <= n; ++b) {
            for (const SeatingTrace& t : exhaustive_full_occupancy(n, b)) {
                SeatingState state = empty_row(n);
                for (int seat : t.choices) {
                    std::vector<int> reach = reachable_seats(state, b);
                    if (!std::binary_search(reach.begin(), reach.end(), seat))
                        return "trace prefix became infeasible at L=" + std::to_string(n) +
                               " b=" + std::to_string(b);
                    state.occupancy[static_cast<size_t>(seat - 1)] = true;
                    ++state.time;
                }
                if (state.time != n) return "full trace did not fill the row";
            }
        }
    }
    // Reachability only shrinks as seats fill, checked along random runs.
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 10, b = 2;
        SeatingTrace t = simulate_random(n, b, seed);
        SeatingState state = empty_row(n);
        std::vector<int> reach = reachable_seats(state, b);
        for (int seat : t.choices) {
            state.occupancy[static_cast<size_t>(seat - 1)] = true;
            ++state.time;
            std::vector<int> after = reachable_seats(state, b);
            for (int x : after) {
                if (!std::binary_search(reach.begin(), reach.end(), x))
                    return "seat became reachable again at seed " + std::to_string(seed);
            }
            reach = std::move(after);
        }
    }
    return {};
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.passed; });
}

VerifyReport run_verification(int max_length) {
    if (max_length < 1) max_length = 1;
    if (max_length > 9) max_length = 9;  // next_permutation sweeps stay tractable
    const std::string sweep = "all of S_1..S_" + std::to_string(max_length);
    const std::string sweep_b = sweep + ", b = 1..L";
    const int dyn_cap = std::min(max_length, 6);
    const std::string sweep_dyn =
        "all of S_1..S_" + std::to_string(dyn_cap) + ", b = 1..L";

    VerifyReport report;
    report.max_length = max_length;
    auto add = [&report](const std::string& name, const std::string& range,
                         std::string err) {
        report.results.push_back(PropertyResult{name, range, err.empty(), std::move(err)});
    };

    add("serialize_roundtrip", sweep, check_serialize_roundtrip(max_length));
    add("rotation_complement_involutions", sweep, check_involutions(max_length));
    add("inverse", sweep, check_inverse(max_length));
    add("foata_roundtrip", sweep, check_foata_roundtrip(max_length));
    add("cycle_head_lookup", sweep + ", all positions", check_cycle_head_lookup(max_length));
    add("canonical_decomposition", sweep, check_canonical_decomposition(max_length));
    add("cycle_lengths_under_inverse", sweep, check_cycle_lengths_under_inverse(max_length));
    add("cycle_bound_vs_anomaly", sweep_b, check_cycle_bound_vs_anomaly(max_length));
    add("rotation_duality", sweep_b, check_rotation_duality(max_length));
    add("bounded_theater_bijection", sweep_b, check_bijection(max_length));
    add("anomaly_nesting", sweep_b, check_anomaly_nesting(max_length));
    add("witness_soundness", sweep_b, check_witness_soundness(max_length));
    add("detector_agreement", sweep_b, check_detector_agreement(max_length));
    add("counting_identity", sweep_b, check_counting_identity(max_length));
    add("counting_bounds", "L = 0.." + std::to_string(max_length) + ", b = 1..L+2",
        check_counting_bounds(max_length));
    add("sampler", "1000 seeds at (4,2), 200 seeds at (" +
                       std::to_string(std::max(3, max_length)) + ",3)",
        check_sampler(max_length));
    add("dynamics_correspondence", sweep_dyn, check_dynamics_correspondence(max_length));
    add("seating_rules", sweep_dyn + "; 100 random runs at (10,2)",
        check_seating_rules(max_length));
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    for (const PropertyResult& r : report.results) {
        out << (r.passed ? "PASS" : "FAIL") << ' ' << r.name << " (" << r.range << ')';
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
    }
    out << (report.all_passed() ? "OK" : "FAILED") << " - " << report.results.size()
        << " properties at max length " << report.max_length << '\n';
    return out.str();
}

}  // namespace theaterperm
