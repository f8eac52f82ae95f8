#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

namespace semforge {

struct LassoOptions {
    double tol = 1e-7;           // per-sweep max coefficient change, relative
    int max_sweeps = 100000;
    // When set, the penalized objective is appended after every sweep.
    std::vector<double>* objective_trace = nullptr;
};

struct LassoResult {
    Eigen::VectorXd gamma;
    int sweeps = 0;
    bool converged = true;
};

// 0.5 * ||y - D g||^2 + lambda * sum_j omega_j |g_j|
double lasso_objective(const Eigen::VectorXd& y, const Eigen::MatrixXd& D,
                       const Eigen::VectorXd& omega, double lambda, const Eigen::VectorXd& gamma);

// Stationarity margins: for each j, how far d_j' (y - D g) is from the
// subgradient condition. Active coordinates must sit on |corr| = lambda*omega,
// inactive ones below it.
struct KktReport {
    double max_active_violation = 0.0;    // relative to lambda * omega_j
    double max_inactive_excess = 0.0;     // absolute excess over lambda * omega_j
    bool ok = false;
};

KktReport kkt_check(const Eigen::VectorXd& y, const Eigen::MatrixXd& D,
                    const Eigen::VectorXd& omega, double lambda, const Eigen::VectorXd& gamma);

// Cyclic coordinate descent with exact soft-threshold updates. Stops when the
// per-sweep coefficient change is below tol * (1 + max|g|) and the KKT margins
// hold; returns the best iterate flagged unconverged after max_sweeps.
LassoResult weighted_lasso_cd(const Eigen::VectorXd& y, const Eigen::MatrixXd& D,
                              const Eigen::VectorXd& omega, double lambda,
                              const std::optional<Eigen::VectorXd>& warm_start = std::nullopt,
                              const LassoOptions& opts = {});

}  // namespace semforge
