#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semforge/cross_validation.hpp"

namespace semforge {

// One structural equation, already centered: the target column, the fitted
// conditional expectations of the other endogenous variables, and the
// target's own instrument columns.
struct EquationProblem {
    int k = 0;                    // global index of the target variable
    Eigen::VectorXd y;            // n
    Eigen::MatrixXd Z;            // n x (p-1), column k excluded
    Eigen::MatrixXd Xs;           // n x |S_k|
    std::vector<int> column_map;  // local Z column -> global endogenous index
};

struct EquationFitConfig {
    double delta = 1.0;  // adaptive-weight exponent
    int folds = 5;
    int path_length = 50;
    std::uint64_t seed = 0;
    // Skips cross-validation and solves at exactly this penalty.
    std::optional<double> fixed_lambda;
};

struct EquationFit {
    Eigen::VectorXd gamma;  // (p-1), local column order of the problem
    Eigen::VectorXd psi;    // |S_k|, zero for dropped instrument columns
    double lambda = 0.0;
    Eigen::VectorXd omega;  // adaptive weights used
    double delta = 1.0;
    std::vector<CvPoint> cv_curve;
    int iterations = 0;
    bool converged = true;
    std::vector<std::string> warnings;
};

// Pilot estimate for the adaptive weights: least squares when the projected
// design is overdetermined and well conditioned, ridge with unit penalty
// otherwise. Deterministic, never fails.
Eigen::VectorXd initial_estimate(const Eigen::VectorXd& y_proj, const Eigen::MatrixXd& Z_proj);

// omega_j = (|pilot_j| + floor)^(-delta) with a floor keeping the weights
// finite; a zero pilot component effectively excludes the variable.
Eigen::VectorXd adaptive_weights(const Eigen::VectorXd& pilot, double delta);

// Full per-equation pipeline: project out the instruments, build weights,
// pick the penalty by cross-validation, solve, and recover the instrument
// effects from the unprojected data.
EquationFit fit_equation(const EquationProblem& prob, const EquationFitConfig& cfg);

}  // namespace semforge
