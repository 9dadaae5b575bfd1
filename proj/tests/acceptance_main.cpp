// Acceptance gate: one line per criterion, non-zero exit on any failure.
#include <cstdio>

#include "selfdual/acceptance.hpp"

int main() {
    int failures = 0;
    const auto results = selfdual::run_acceptance([&](const selfdual::CriterionResult& r) {
        std::printf("%s  criterion %d (%s): %s  [%.2f s]\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.passed) ++failures;
    });
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
