// Self-contained randomized property suite behind the `check` subcommand:
// tensor algebra identities, potential/conjugate relations, thickness
// moments, and solver-vs-oracle equivalence on a tiny instance.
#pragma once

#include <string>
#include <vector>

namespace plp {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CheckResult> run_property_checks(unsigned seed);

}  // namespace plp
