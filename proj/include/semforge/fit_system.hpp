#pragma once

#include <cstdint>

#include "semforge/data.hpp"
#include "semforge/equation.hpp"
#include "semforge/ridge.hpp"

namespace semforge {

struct FitConfig {
    StageOneStrategy stage_one = StageOneStrategy::RidgeGcv;
    GcvSearchConfig gcv;
    double delta = 1.0;
    int folds = 5;
    int path_length = 50;
    std::uint64_t master_seed = 0;
    int threads = 1;  // 0 = all hardware threads

    void check() const;
};

// Full two-stage fit: center, estimate the conditional expectations, then
// solve every structural equation. A failed equation leaves zero columns in
// the estimate plus a diagnostic record; the rest of the system proceeds.
// Output is bit-identical for any thread count at a fixed seed.
SystemEstimate fit_system(const DataSet& ds, const ExoAssignment& ea, const FitConfig& cfg);

}  // namespace semforge
