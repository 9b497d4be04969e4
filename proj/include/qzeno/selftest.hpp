// selftest.hpp — full validation suite (oracle agreement, sum rules,
// trapped-population triple, tail exponents, interrogation witnesses,
// special-function fixtures, property checks)

#pragma once

#include <string>
#include <vector>

namespace qzeno::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // measured values
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

Report run_all();

} // namespace qzeno::selftest
