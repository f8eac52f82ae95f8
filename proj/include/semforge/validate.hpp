#pragma once

#include "semforge/data.hpp"

namespace semforge {

// Checks dataset dimensions, finiteness, and the instrument-set rules
// (every set nonempty, pairwise disjoint, indices in range). Reports the
// first violated rule; constant exogenous columns only produce warnings.
ValidationReport validate(const DataSet& ds, const ExoAssignment& ea);

}  // namespace semforge
