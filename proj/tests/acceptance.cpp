// Verification battery entry point: one line per criterion, nonzero exit on
// any failure. Accepts --max-cells <n> and --only <substring>.
#include <cstdlib>
#include <iostream>
#include <string>

#include "tabkit/verify.hpp"

int main(int argc, char** argv) {
    int max_cells = 12;
    std::string only;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--max-cells") max_cells = std::atoi(argv[i + 1]);
        if (std::string(argv[i]) == "--only") only = argv[i + 1];
    }

    bool all_pass = true;
    for (const tabkit::CriterionResult& result : tabkit::run_acceptance(max_cells, only)) {
        const char* tag = result.skipped ? "[SKIP]" : result.pass ? "[PASS]" : "[FAIL]";
        std::cout << tag << " " << result.id << " - " << result.title << "\n";
        for (const std::string& failure : result.failures)
            std::cout << "       " << failure << "\n";
        if (!result.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
