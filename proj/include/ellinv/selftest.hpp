// Property suites exercising every module against independent oracles and
// fixed reference values; shared by the command-line `selftest` entry
// point and the acceptance harness.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ellinv {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    double worst = 0.0; // worst residual observed (0 for exact suites)
    std::string note;

    bool pass() const { return failures == 0; }
};

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

// Prints one line per suite plus a summary; true iff everything passed.
bool run_selftest(std::uint64_t seed, std::ostream& os);

} // namespace ellinv
