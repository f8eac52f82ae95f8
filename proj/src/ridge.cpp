#include "semforge/ridge.hpp"

#include <cmath>
#include <string>

#include "semforge/common.hpp"
#include "semforge/cross_validation.hpp"
#include "semforge/equation.hpp"
#include "semforge/lasso_cd.hpp"
#include "semforge/parallel.hpp"
#include "semforge/rng.hpp"

namespace semforge {

RidgeFit ridge_fit(const DesignFactorization& fact, const Eigen::VectorXd& y, double tau) {
    if (tau < 0.0) throw ValidationError("ridge_fit: tau must be nonnegative");
    if (tau == 0.0 && fact.rank < fact.q())
        throw NumericError("ridge_fit: OLS undefined, design is rank deficient (rank " +
                           std::to_string(fact.rank) + " < " + std::to_string(fact.q()) + ")");

    const Eigen::VectorXd uty = fact.U.transpose() * y;
    Eigen::VectorXd coef_scale(fact.rank);
    Eigen::VectorXd fit_scale(fact.rank);
    for (Eigen::Index i = 0; i < fact.rank; ++i) {
        const double d = fact.singular_values(i);
        coef_scale(i) = d / (d * d + tau) * uty(i);
        fit_scale(i) = d * d / (d * d + tau) * uty(i);
    }
    return {fact.U * fit_scale, fact.V * coef_scale};
}

namespace {

// One reduced-form equation by adaptive lasso: pilot from the stage-2 rule,
// weights, CV over the penalty, then a warm-started solve.
void stage_one_lasso_column(const Eigen::MatrixXd& Xc, const Eigen::VectorXd& y,
                            const StageOneConfig& cfg, std::uint64_t col_seed,
                            Eigen::VectorXd& pi_out, Eigen::VectorXd& zhat_out,
                            bool& converged_out) {
    const Eigen::VectorXd pilot = initial_estimate(y, Xc);
    const Eigen::VectorXd omega = adaptive_weights(pilot, cfg.delta);
    const CvResult cv = cv_select_lambda(y, Xc, omega, cfg.folds, cfg.path_length, col_seed);

    Eigen::VectorXd warm = Eigen::VectorXd::Zero(Xc.cols());
    for (double lam : lambda_path(y, Xc, omega, cfg.path_length)) {
        if (lam <= cv.lambda) break;
        warm = weighted_lasso_cd(y, Xc, omega, lam, warm).gamma;
    }
    const LassoResult sol = weighted_lasso_cd(y, Xc, omega, cv.lambda, warm);
    pi_out = sol.gamma;
    zhat_out = Xc * sol.gamma;
    converged_out = sol.converged && cv.all_converged;
}

}  // namespace

StageOneResult stage_one(const Eigen::MatrixXd& Yc, const Eigen::MatrixXd& Xc,
                         const StageOneConfig& cfg) {
    if (Yc.rows() != Xc.rows()) throw ValidationError("stage_one: Y and X row counts differ");
    const Eigen::Index n = Yc.rows();
    const Eigen::Index p = Yc.cols();
    const Eigen::Index q = Xc.cols();

    StageOneResult out;
    out.Zhat.resize(n, p);
    out.taus = Eigen::VectorXd::Zero(p);
    out.Pi_hat = Eigen::MatrixXd::Zero(q, p);

    std::vector<std::string> col_warnings(static_cast<std::size_t>(p));

    if (cfg.strategy == StageOneStrategy::RidgeGcv) {
        const DesignFactorization fact = decompose_design(Xc);
        parallel_for(static_cast<std::size_t>(p), cfg.threads, [&](std::size_t j) {
            try {
                const Eigen::Index col = static_cast<Eigen::Index>(j);
                const double tau = select_tau(fact, Yc.col(col), cfg.gcv);
                const RidgeFit fit = ridge_fit(fact, Yc.col(col), tau);
                out.taus(col) = tau;
                out.Zhat.col(col) = fit.zhat;
                out.Pi_hat->col(col) = fit.pihat;
                if (tau > std::sqrt(static_cast<double>(n)))
                    col_warnings[j] = "column " + std::to_string(j) + ": selected tau " +
                                      std::to_string(tau) + " exceeds sqrt(n), shrinkage is heavy";
            } catch (const std::exception& e) {
                throw NumericError("stage one, column " + std::to_string(j) + ": " + e.what());
            }
        });
    } else {
        parallel_for(static_cast<std::size_t>(p), cfg.threads, [&](std::size_t j) {
            try {
                const Eigen::Index col = static_cast<Eigen::Index>(j);
                Eigen::VectorXd pi, zhat;
                bool converged = true;
                stage_one_lasso_column(Xc, Yc.col(col), cfg,
                                       derive_seed(cfg.seed, StreamTag::kStageOneColumn, j), pi,
                                       zhat, converged);
                out.Pi_hat->col(col) = pi;
                out.Zhat.col(col) = zhat;
                if (!converged)
                    col_warnings[j] = "column " + std::to_string(j) + ": lasso hit the sweep cap";
            } catch (const std::exception& e) {
                throw NumericError("stage one, column " + std::to_string(j) + ": " + e.what());
            }
        });
    }

    for (auto& w : col_warnings)
        if (!w.empty()) out.warnings.push_back(std::move(w));
    return out;
}

}  // namespace semforge
