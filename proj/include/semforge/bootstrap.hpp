#pragma once

#include <cstdint>

#include "semforge/fit_system.hpp"

namespace semforge {

struct BootstrapConfig {
    int replicates = 100;
    std::uint64_t master_seed = 0;
    double frequency_threshold = 0.0;  // applied by callers via filtered()
    int threads = 1;

    void check() const;
};

// Resamples observation rows with replacement, refits the whole system per
// replicate (stage 1 included), and tabulates how often each directed edge is
// selected. Degenerate resamples (an equation whose entire instrument block
// becomes constant) are skipped and excluded from the denominator.
EdgeFrequencyTable bootstrap_edges(const DataSet& ds, const ExoAssignment& ea,
                                   const FitConfig& fit_cfg, const BootstrapConfig& boot_cfg);

}  // namespace semforge
