#ifndef THEATERPERM_VERIFY_HPP
#define THEATERPERM_VERIFY_HPP

#include <string>
#include <vector>

namespace theaterperm {

struct PropertyResult {
    std::string name;
    std::string range;    // what was swept, e.g. "all of S_1..S_6, b = 1..L"
    bool passed = false;
    std::string detail;   // first counterexample when failed
};

struct VerifyReport {
    int max_length = 0;
    std::vector<PropertyResult> results;

    bool all_passed() const;
};

/// Runs the whole invariant suite exhaustively up to S_max_length (the
/// seating-dynamics cross-check is additionally capped at L = 6 and the
/// exhaustive searches at their own feasibility caps). max_length = 6 keeps
/// the run sub-second; 7 is feasible but slower.
VerifyReport run_verification(int max_length);

std::string format_report(const VerifyReport& report);

}  // namespace theaterperm

#endif  // THEATERPERM_VERIFY_HPP
