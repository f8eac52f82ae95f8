#pragma once

#include <Eigen/Core>
#include <optional>

#include "semforge/design_svd.hpp"

namespace semforge {

// Search domain for the ridge penalty. Unset bounds default to
// [1e-4 * d_min^2, 1e4 * d_max^2] of the design spectrum, which covers every
// shrinkage regime from near-OLS to near-zero fit.
struct GcvSearchConfig {
    std::optional<double> tau_min;
    std::optional<double> tau_max;
    int grid_points = 49;
    double refine_tolerance = 1e-3;  // relative width of the final bracket

    void check() const;
    std::pair<double, double> resolved_bounds(const DesignFactorization& fact) const;
};

// Generalized cross-validation score ||(I - P_tau) y||^2 / (n - tr(P_tau))^2
// evaluated through the shared factorization in O(r). Throws NumericError on a
// degenerate denominator (possible only when rank == n and tau -> 0).
double gcv_value(const DesignFactorization& fact, const Eigen::VectorXd& y, double tau);

// Grid scan over log-spaced penalties followed by golden-section refinement of
// the best bracket. A flat grid (max - min <= 1e-12 * min) returns the lower
// bound of the search domain.
double select_tau(const DesignFactorization& fact, const Eigen::VectorXd& y,
                  const GcvSearchConfig& cfg);

}  // namespace semforge
