#include "semforge/fit_system.hpp"

#include <string>

#include "semforge/center.hpp"
#include "semforge/common.hpp"
#include "semforge/parallel.hpp"
#include "semforge/rng.hpp"
#include "semforge/validate.hpp"

namespace semforge {

void FitConfig::check() const {
    gcv.check();
    if (!(delta > 0.0)) throw ValidationError("fit config: delta must be positive");
    if (folds < 2) throw ValidationError("fit config: need at least 2 CV folds");
    if (path_length < 1) throw ValidationError("fit config: path length must be positive");
    if (threads < 0) throw ValidationError("fit config: threads must be >= 0");
}

SystemEstimate fit_system(const DataSet& ds, const ExoAssignment& ea, const FitConfig& cfg) {
    cfg.check();
    const ValidationReport report = validate(ds, ea);
    if (!report.ok) throw ValidationError(report.message);

    const Eigen::Index n = ds.n();
    const Eigen::Index p = ds.p();
    const Eigen::Index q = ds.q();

    const Eigen::MatrixXd Yc = center_columns(ds.Y).values;
    const Eigen::MatrixXd Xc = center_columns(ds.X).values;

    StageOneConfig s1;
    s1.strategy = cfg.stage_one;
    s1.gcv = cfg.gcv;
    s1.delta = cfg.delta;
    s1.folds = cfg.folds;
    s1.path_length = cfg.path_length;
    s1.seed = cfg.master_seed;
    s1.threads = cfg.threads;
    const StageOneResult stage1 = stage_one(Yc, Xc, s1);

    SystemEstimate est;
    est.Gamma = Eigen::MatrixXd::Zero(p, p);
    est.Psi = Eigen::MatrixXd::Zero(q, p);
    est.lambdas = Eigen::VectorXd::Zero(p);
    est.stage1_taus = stage1.taus;
    est.diagnostics.resize(static_cast<std::size_t>(p));

    parallel_for(static_cast<std::size_t>(p), cfg.threads, [&](std::size_t kk) {
        const Eigen::Index k = static_cast<Eigen::Index>(kk);
        EquationDiagnostics& diag = est.diagnostics[kk];
        diag.equation = static_cast<int>(k);
        try {
            EquationProblem prob;
            prob.k = static_cast<int>(k);
            prob.y = Yc.col(k);
            prob.Z.resize(n, p - 1);
            prob.column_map.reserve(static_cast<std::size_t>(p - 1));
            Eigen::Index local = 0;
            for (Eigen::Index j = 0; j < p; ++j) {
                if (j == k) continue;
                prob.Z.col(local++) = stage1.Zhat.col(j);
                prob.column_map.push_back(static_cast<int>(j));
            }
            const auto& set = ea.sets[kk];
            prob.Xs.resize(n, static_cast<Eigen::Index>(set.size()));
            for (std::size_t i = 0; i < set.size(); ++i) prob.Xs.col(i) = Xc.col(set[i]);

            EquationFitConfig ecfg;
            ecfg.delta = cfg.delta;
            ecfg.folds = cfg.folds;
            ecfg.path_length = cfg.path_length;
            ecfg.seed = derive_seed(cfg.master_seed, StreamTag::kEquation, kk);
            const EquationFit fit = fit_equation(prob, ecfg);

            for (Eigen::Index j = 0; j < prob.Z.cols(); ++j)
                est.Gamma(prob.column_map[static_cast<std::size_t>(j)], k) = fit.gamma(j);
            for (std::size_t i = 0; i < set.size(); ++i)
                est.Psi(set[i], k) = fit.psi(static_cast<Eigen::Index>(i));
            est.lambdas(k) = fit.lambda;

            diag.lambda = fit.lambda;
            diag.active_set_size = static_cast<int>((fit.gamma.array() != 0.0).count());
            diag.iterations = fit.iterations;
            diag.converged = fit.converged;
            diag.warnings = fit.warnings;
            for (const auto& pt : fit.cv_curve)
                if (pt.lambda == fit.lambda) diag.cv_error = pt.mean_error;
        } catch (const std::exception& e) {
            // Isolate the failure: this equation contributes nothing, the
            // rest of the system is still estimated.
            diag.failed = true;
            diag.error = e.what();
        }
    });

    for (const auto& w : stage1.warnings) {
        // Stage-1 warnings are system-wide; attach them to the first record.
        if (!est.diagnostics.empty()) est.diagnostics[0].warnings.push_back("stage1: " + w);
    }
    return est;
}

}  // namespace semforge
