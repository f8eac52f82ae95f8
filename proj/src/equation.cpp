#include "semforge/equation.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "semforge/annihilator.hpp"
#include "semforge/common.hpp"
#include "semforge/lasso_cd.hpp"

namespace semforge {

namespace {

constexpr double kPilotCondLimit = 1e8;
constexpr double kPilotRidgePenalty = 1.0;

[[noreturn]] void rethrow_tagged(int k) {
    const std::string prefix = "equation " + std::to_string(k) + ": ";
    try {
        throw;
    } catch (const ValidationError& e) {
        throw ValidationError(prefix + e.what());
    } catch (const NumericError& e) {
        throw NumericError(prefix + e.what());
    } catch (const std::exception& e) {
        throw std::runtime_error(prefix + e.what());
    }
}

}  // namespace

Eigen::VectorXd initial_estimate(const Eigen::VectorXd& y_proj, const Eigen::MatrixXd& Z_proj) {
    const Eigen::Index m = Z_proj.cols();
    if (m == 0) return Eigen::VectorXd();

    Eigen::BDCSVD<Eigen::MatrixXd> svd(Z_proj, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& d = svd.singularValues();
    const Eigen::VectorXd uty = svd.matrixU().transpose() * y_proj;

    const double d_max = d.size() ? d(0) : 0.0;
    const double d_min = d.size() ? d(d.size() - 1) : 0.0;
    // Condition number of the Gram matrix is the squared singular value ratio.
    const bool well_posed = Z_proj.rows() > m && d_min > 0.0 &&
                            (d_max / d_min) * (d_max / d_min) <= kPilotCondLimit;

    Eigen::VectorXd scaled(d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        scaled(i) = well_posed ? uty(i) / d(i)
                               : uty(i) * d(i) / (d(i) * d(i) + kPilotRidgePenalty);
    }
    return svd.matrixV() * scaled;
}

Eigen::VectorXd adaptive_weights(const Eigen::VectorXd& pilot, double delta) {
    if (!(delta > 0.0)) throw ValidationError("adaptive_weights: delta must be positive");
    const double floor = 1e-10 * std::max(1.0, pilot.size() ? pilot.cwiseAbs().maxCoeff() : 1.0);
    Eigen::VectorXd omega(pilot.size());
    for (Eigen::Index j = 0; j < pilot.size(); ++j)
        omega(j) = std::pow(std::abs(pilot(j)) + floor, -delta);
    return omega;
}

EquationFit fit_equation(const EquationProblem& prob, const EquationFitConfig& cfg) {
    try {
        const Eigen::Index n = prob.y.size();
        const Eigen::Index m = prob.Z.cols();
        if (prob.Z.rows() != n || prob.Xs.rows() != n)
            throw ValidationError("row count mismatch between y, Z, and Xs");
        if (static_cast<Eigen::Index>(prob.column_map.size()) != m)
            throw ValidationError("column_map size does not match Z");
        if (prob.Xs.cols() < 1) throw ValidationError("no instrument columns");

        EquationFit fit;
        fit.delta = cfg.delta;

        const std::vector<int> kept = independent_columns(prob.Xs);
        if (kept.empty())
            throw NumericError("degenerate instruments: every column is constant or zero");
        Eigen::MatrixXd Xs_used(n, static_cast<Eigen::Index>(kept.size()));
        for (std::size_t i = 0; i < kept.size(); ++i) Xs_used.col(i) = prob.Xs.col(kept[i]);
        if (static_cast<Eigen::Index>(kept.size()) < prob.Xs.cols())
            fit.warnings.push_back("collinear instruments: dropped " +
                                   std::to_string(prob.Xs.cols() - kept.size()) +
                                   " dependent column(s)");

        const Annihilator H(Xs_used);
        const Eigen::VectorXd y_proj = H.apply(prob.y);
        const Eigen::MatrixXd Z_proj = H.apply(prob.Z);

        const Eigen::VectorXd pilot = initial_estimate(y_proj, Z_proj);
        fit.omega = adaptive_weights(pilot, cfg.delta);

        if (cfg.fixed_lambda) {
            fit.lambda = *cfg.fixed_lambda;
        } else {
            CvResult cv = cv_select_lambda(y_proj, Z_proj, fit.omega, cfg.folds,
                                           cfg.path_length, cfg.seed);
            fit.lambda = cv.lambda;
            fit.cv_curve = std::move(cv.curve);
            if (!cv.all_converged)
                fit.warnings.push_back("coordinate descent hit the sweep cap in some CV fits");
        }

        // Warm-start down the path, then solve at the selected penalty.
        Eigen::VectorXd warm = Eigen::VectorXd::Zero(m);
        for (double lam : lambda_path(y_proj, Z_proj, fit.omega, cfg.path_length)) {
            if (lam <= fit.lambda) break;
            warm = weighted_lasso_cd(y_proj, Z_proj, fit.omega, lam, warm).gamma;
        }
        const LassoResult sol = weighted_lasso_cd(y_proj, Z_proj, fit.omega, fit.lambda, warm);
        fit.gamma = sol.gamma;
        fit.iterations = sol.sweeps;
        fit.converged = sol.converged;
        if (!sol.converged) fit.warnings.push_back("unconverged: sweep cap reached at the final fit");

        // Instrument effects from the profiled solution on unprojected data.
        const Eigen::VectorXd resid = prob.y - prob.Z * fit.gamma;
        const Eigen::VectorXd psi_kept =
            (Xs_used.transpose() * Xs_used).llt().solve(Xs_used.transpose() * resid);
        fit.psi = Eigen::VectorXd::Zero(prob.Xs.cols());
        for (std::size_t i = 0; i < kept.size(); ++i)
            fit.psi(kept[i]) = psi_kept(static_cast<Eigen::Index>(i));

        return fit;
    } catch (...) {
        rethrow_tagged(prob.k);
    }
}

}  // namespace semforge
