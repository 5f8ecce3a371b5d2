#pragma once

#include <string>
#include <vector>

namespace hplane {

struct CheckResult {
    std::string name;
    std::string scope;           // what was swept, e.g. "n <= 12, q = 1, h symbolic"
    bool passed = false;
    std::string counterexample;  // empty when passed
};

struct VerifyOptions {
    unsigned max_n = 12;
    /// Corrupts one expected coefficient to exercise the failure path.
    bool inject_fault = false;
};

/// Runs the full cross-verification suite: closed forms against brute-force
/// expansion, recurrences, specializations, the Manin transformation check,
/// rewriting confluence, and strategy/execution equivalence.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hplane
