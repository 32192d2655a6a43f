#ifndef MCKAY_SELFCHECK_HPP
#define MCKAY_SELFCHECK_HPP

#include <string>
#include <vector>

// Desk-scale invariant suites behind `mckay verify`.  Excluded
// configurations in a grid are reported as SKIP, never FAIL.

namespace mckay::selfcheck {

struct CheckResult {
    std::string name;
    std::string status; // "PASS", "FAIL", "SKIP"
    std::string detail; // failure message or skip reason
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

const std::vector<std::string>& suite_names(); // fields, linalg, ..., all

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name);

} // namespace mckay::selfcheck

#endif
