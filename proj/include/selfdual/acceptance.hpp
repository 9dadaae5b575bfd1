#pragma once

#include <functional>
#include <string>
#include <vector>

namespace selfdual {

// Outcome of one acceptance criterion.
struct CriterionResult {
    int id = 0;
    std::string name;     // short slug, stable across runs
    bool passed = false;
    std::string detail;   // one-line account of what was measured
    double seconds = 0.0;
};

// Runs the full acceptance suite (criteria 1..9) in order. Each criterion
// is self-contained: a thrown exception fails that criterion only. The
// optional callback receives every result as soon as it is known, so
// front-ends can stream a table. Fixture files are looked up in
// SELFDUAL_FIXTURE_DIR (environment variable first, compiled-in default
// second).
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace selfdual
