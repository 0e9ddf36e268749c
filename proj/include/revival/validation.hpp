#pragma once

#include <string>
#include <vector>

namespace revival {

/// One acceptance check with its measured values.  Advisory entries
/// report diagnostics beyond the theorem's hypothesis and never fail.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool advisory = false;
    std::string detail;
    double seconds = 0.0;
};

/// Named validation suites: gauss, free, mathieu, biortho, selfadjoint.
std::vector<CriterionResult> run_suite(const std::string& suite);

/// All twelve acceptance criteria in order.
std::vector<CriterionResult> run_all_criteria();

std::vector<std::string> suite_names();

}  // namespace revival
