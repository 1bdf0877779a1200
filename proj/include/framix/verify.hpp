#pragma once

#include <string>
#include <vector>

namespace framix {

// One verification check: a stable name, the outcome, and a short witness
// (the computed value, parameter set, or counterexample description).
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

// Named suites: "trace", "esystem", "tl", "ftl", "ptl", "theta", "skein",
// or "all". d bounds the modulus, n the strand count for randomized parts,
// seed fixes the random stream. Throws on an unknown suite name.
std::vector<CheckResult> verify_suite(const std::string& suite, int d, int n, unsigned seed);

// Line-per-check report: "CHECK <name> PASS|FAIL <witness>".
std::string format_checks(const std::vector<CheckResult>& checks);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace framix
