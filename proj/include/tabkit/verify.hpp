#pragma once

#include <string>
#include <vector>

namespace tabkit {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    bool skipped = false;                 // filtered out entirely by max_cells
    std::vector<std::string> failures;    // first few mismatches, for diagnosis
};

/// Runs the full verification battery. Grid-based checks skip cases with more
/// than max_cells cells; `only` keeps the criteria whose id contains it.
std::vector<CriterionResult> run_acceptance(int max_cells = 12, const std::string& only = "");

}  // namespace tabkit
