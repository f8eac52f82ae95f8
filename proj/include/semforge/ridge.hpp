#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "semforge/data.hpp"
#include "semforge/design_svd.hpp"
#include "semforge/gcv.hpp"

namespace semforge {

struct RidgeFit {
    Eigen::VectorXd zhat;   // fitted values, in the span of the design columns
    Eigen::VectorXd pihat;  // coefficients
};

// Ridge solution through the shared factorization. tau = 0 demands a
// full-column-rank design (rank == q), otherwise NumericError("OLS undefined").
RidgeFit ridge_fit(const DesignFactorization& fact, const Eigen::VectorXd& y, double tau);

enum class StageOneStrategy {
    RidgeGcv,             // ridge per column, penalty chosen by GCV
    AdaptiveLassoStage1,  // adaptive lasso per reduced-form equation
};

struct StageOneConfig {
    StageOneStrategy strategy = StageOneStrategy::RidgeGcv;
    GcvSearchConfig gcv;
    // Knobs for the adaptive-lasso variant.
    double delta = 1.0;
    int folds = 5;
    int path_length = 50;
    std::uint64_t seed = 0;
    int threads = 1;
};

// Fits every reduced-form equation on the centered data and returns the
// estimated conditional expectations. Columns are independent tasks; the
// result is bit-identical for any thread count.
StageOneResult stage_one(const Eigen::MatrixXd& Yc, const Eigen::MatrixXd& Xc,
                         const StageOneConfig& cfg);

}  // namespace semforge
