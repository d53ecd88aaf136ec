#pragma once

#include <string>
#include <vector>

namespace vade {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, when any
    double seconds = 0.0;
};

/// Runs the full verification suite (the nine release criteria) and returns
/// one result per criterion.
std::vector<CriterionResult> run_selftest();

}  // namespace vade
