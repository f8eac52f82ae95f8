#include "semforge/cross_validation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "semforge/common.hpp"
#include "semforge/lasso_cd.hpp"
#include "semforge/rng.hpp"

namespace semforge {

std::vector<int> cv_fold_labels(Eigen::Index n, int folds, std::uint64_t seed) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_seed(seed, StreamTag::kCvFolds, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(folds)));
    for (std::size_t i = order.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform_int(i));
        std::swap(order[i - 1], order[j]);
    }
    std::vector<int> label(static_cast<std::size_t>(n));
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        label[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos % folds);
    return label;
}

std::vector<double> lambda_path(const Eigen::VectorXd& y, const Eigen::MatrixXd& D,
                                const Eigen::VectorXd& omega, int length) {
    double lambda_max = 0.0;
    for (Eigen::Index j = 0; j < D.cols(); ++j)
        lambda_max = std::max(lambda_max, std::abs(D.col(j).dot(y)) / omega(j));

    std::vector<double> path(static_cast<std::size_t>(length));
    if (lambda_max <= 0.0) {
        std::fill(path.begin(), path.end(), 0.0);
        return path;
    }
    const double lambda_min = 1e-4 * lambda_max;
    for (int i = 0; i < length; ++i) {
        const double t = length == 1 ? 0.0 : static_cast<double>(i) / (length - 1);
        path[static_cast<std::size_t>(i)] =
            std::exp(std::log(lambda_max) * (1.0 - t) + std::log(lambda_min) * t);
    }
    return path;
}

CvResult cv_select_lambda(const Eigen::VectorXd& y, const Eigen::MatrixXd& D,
                          const Eigen::VectorXd& omega, int folds, int path_length,
                          std::uint64_t seed) {
    const Eigen::Index n = y.size();
    if (folds < 2) throw ValidationError("cv_select_lambda: need at least 2 folds");
    if (n < 2 * folds)
        throw ValidationError("cv_select_lambda: need n >= 2K observations, got n = " +
                              std::to_string(n) + ", K = " + std::to_string(folds));
    if (path_length < 1) throw ValidationError("cv_select_lambda: empty path");

    // lambda_max comes from the full data and is shared by all folds.
    const std::vector<double> path = lambda_path(y, D, omega, path_length);
    const std::vector<int> label = cv_fold_labels(n, folds, seed);

    std::vector<double> sse(path.size(), 0.0);
    bool all_converged = true;

    for (int f = 0; f < folds; ++f) {
        Eigen::Index n_test = 0;
        for (int l : label) n_test += (l == f);
        const Eigen::Index n_train = n - n_test;

        Eigen::MatrixXd D_train(n_train, D.cols());
        Eigen::VectorXd y_train(n_train);
        Eigen::MatrixXd D_test(n_test, D.cols());
        Eigen::VectorXd y_test(n_test);
        Eigen::Index it = 0, iv = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (label[static_cast<std::size_t>(i)] == f) {
                D_test.row(iv) = D.row(i);
                y_test(iv++) = y(i);
            } else {
                D_train.row(it) = D.row(i);
                y_train(it++) = y(i);
            }
        }

        Eigen::VectorXd warm = Eigen::VectorXd::Zero(D.cols());
        for (std::size_t s = 0; s < path.size(); ++s) {
            const LassoResult fit = weighted_lasso_cd(y_train, D_train, omega, path[s], warm);
            all_converged = all_converged && fit.converged;
            warm = fit.gamma;
            sse[s] += (y_test - D_test * fit.gamma).squaredNorm();
        }
    }

    CvResult res;
    res.all_converged = all_converged;
    res.curve.resize(path.size());
    std::size_t best = 0;
    for (std::size_t s = 0; s < path.size(); ++s) {
        res.curve[s] = {path[s], sse[s] / static_cast<double>(n)};
        // Strict improvement only: the path descends, so ties keep the larger lambda.
        if (res.curve[s].mean_error < res.curve[best].mean_error) best = s;
    }
    res.lambda = res.curve[best].lambda;
    return res;
}

}  // namespace semforge
