#include "semforge/bootstrap.hpp"

#include <vector>

#include "semforge/common.hpp"
#include "semforge/parallel.hpp"
#include "semforge/rng.hpp"
#include "semforge/validate.hpp"

namespace semforge {

void BootstrapConfig::check() const {
    if (replicates < 1) throw ValidationError("bootstrap: need at least 1 replicate");
    if (frequency_threshold < 0.0 || frequency_threshold > 1.0)
        throw ValidationError("bootstrap: frequency threshold must be in [0, 1]");
}

namespace {

// A resample is unusable when some equation loses its entire instrument
// block to constancy; partial collinearity is handled downstream by
// column dropping.
bool degenerate_resample(const Eigen::MatrixXd& X, const ExoAssignment& ea) {
    for (const auto& set : ea.sets) {
        bool any_varying = false;
        for (int idx : set) {
            const auto col = X.col(idx);
            if (col.maxCoeff() - col.minCoeff() > 0.0) {
                any_varying = true;
                break;
            }
        }
        if (!any_varying) return true;
    }
    return false;
}

}  // namespace

EdgeFrequencyTable bootstrap_edges(const DataSet& ds, const ExoAssignment& ea,
                                   const FitConfig& fit_cfg, const BootstrapConfig& boot_cfg) {
    fit_cfg.check();
    boot_cfg.check();
    const ValidationReport report = validate(ds, ea);
    if (!report.ok) throw ValidationError(report.message);

    const Eigen::Index n = ds.n();
    const Eigen::Index p = ds.p();
    const int B = boot_cfg.replicates;

    struct Replicate {
        bool skipped = false;
        Eigen::MatrixXd Gamma;
    };
    std::vector<Replicate> reps(static_cast<std::size_t>(B));

    // Replicates are the parallel unit; each fit runs single threaded so the
    // per-equation substreams and outputs stay schedule independent.
    FitConfig inner = fit_cfg;
    inner.threads = 1;

    parallel_for(static_cast<std::size_t>(B), boot_cfg.threads, [&](std::size_t b) {
        Rng rng(derive_seed(boot_cfg.master_seed, StreamTag::kBootstrapResample, b));
        DataSet sample;
        sample.endo_names = ds.endo_names;
        sample.exo_names = ds.exo_names;
        sample.Y.resize(n, p);
        sample.X.resize(n, ds.q());
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Index row = static_cast<Eigen::Index>(rng.uniform_int(n));
            sample.Y.row(i) = ds.Y.row(row);
            sample.X.row(i) = ds.X.row(row);
        }

        if (degenerate_resample(sample.X, ea)) {
            reps[b].skipped = true;
            return;
        }

        FitConfig rep_cfg = inner;
        rep_cfg.master_seed = derive_seed(boot_cfg.master_seed, StreamTag::kBootstrapFit, b);
        reps[b].Gamma = fit_system(sample, ea, rep_cfg).Gamma;
    });

    // Fixed-order reduction over replicates keeps the table deterministic.
    Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(p, p);
    Eigen::MatrixXd effect_sums = Eigen::MatrixXd::Zero(p, p);
    int valid = 0;
    int skipped = 0;
    for (const auto& rep : reps) {
        if (rep.skipped) {
            ++skipped;
            continue;
        }
        ++valid;
        for (Eigen::Index j = 0; j < p; ++j) {
            for (Eigen::Index k = 0; k < p; ++k) {
                if (j == k || rep.Gamma(j, k) == 0.0) continue;
                counts(j, k) += 1;
                effect_sums(j, k) += rep.Gamma(j, k);
            }
        }
    }
    if (valid == 0) throw NumericError("bootstrap: every replicate was degenerate");

    EdgeFrequencyTable table;
    table.replicates = valid;
    table.skipped = skipped;
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index k = 0; k < p; ++k) {
            if (counts(j, k) == 0) continue;
            EdgeFrequencyRow row;
            row.source = static_cast<int>(j);
            row.target = static_cast<int>(k);
            row.mean_effect = effect_sums(j, k) / counts(j, k);
            row.frequency = static_cast<double>(counts(j, k)) / valid;
            row.replicates = valid;
            table.rows.push_back(row);
        }
    }
    return table;
}

}  // namespace semforge
