#pragma once

#include <string>
#include <vector>

namespace hyposhift::verify {

struct CheckResult {
    std::string group;
    std::string name;
    bool pass = false;
    std::string detail;  // first failing expectation, empty on pass
};

// Groups in execution order: hilbert, kappa, h2pair, s1, classa, subnormal.
std::vector<std::string> check_groups();

// Runs the acceptance checks; an empty filter runs everything. Throws
// std::invalid_argument on an unknown group name.
std::vector<CheckResult> run_checks(const std::vector<std::string>& only_groups);

}  // namespace hyposhift::verify
