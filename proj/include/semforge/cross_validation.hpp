#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>
#include <vector>

namespace semforge {

struct CvPoint {
    double lambda = 0.0;
    double mean_error = 0.0;  // held-out SSE / n
};

struct CvResult {
    double lambda = 0.0;
    std::vector<CvPoint> curve;  // descending lambda, full path
    bool all_converged = true;
};

// Fold labels in [0, folds) for each of n observations; a pure function of
// (n, folds, seed), independent of the data.
std::vector<int> cv_fold_labels(Eigen::Index n, int folds, std::uint64_t seed);

// Log-spaced path from lambda_max = max_j |d_j'y| / omega_j down to
// 1e-4 * lambda_max.
std::vector<double> lambda_path(const Eigen::VectorXd& y, const Eigen::MatrixXd& D,
                                const Eigen::VectorXd& omega, int length);

// K-fold cross-validation over the path with warm starts within each fold.
// Ties in mean error keep the larger (sparser) lambda.
CvResult cv_select_lambda(const Eigen::VectorXd& y, const Eigen::MatrixXd& D,
                          const Eigen::VectorXd& omega, int folds, int path_length,
                          std::uint64_t seed);

}  // namespace semforge
