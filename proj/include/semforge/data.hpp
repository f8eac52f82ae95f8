#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semforge {

// Paired observations of p endogenous and q exogenous variables, one row per
// observational unit. Immutable after construction; all indices are 0-based.
struct DataSet {
    Eigen::MatrixXd Y;  // n x p
    Eigen::MatrixXd X;  // n x q
    std::vector<std::string> endo_names;
    std::vector<std::string> exo_names;

    Eigen::Index n() const { return Y.rows(); }
    Eigen::Index p() const { return Y.cols(); }
    Eigen::Index q() const { return X.cols(); }
};

// Per-equation instrument sets: sets[k] lists the exogenous columns assigned
// to endogenous variable k. Sets must be nonempty and pairwise disjoint.
struct ExoAssignment {
    std::vector<std::vector<int>> sets;
};

struct ValidationReport {
    bool ok = true;
    std::string message;  // first violated rule, empty when ok
    std::vector<std::string> warnings;
};

// Stage-1 output: fitted conditional expectations of each endogenous variable
// given all exogenous variables, with the per-column ridge penalties used.
struct StageOneResult {
    Eigen::MatrixXd Zhat;            // n x p, each column in span of centered X
    Eigen::VectorXd taus;            // p, zero for columns fit by the lasso variant
    std::optional<Eigen::MatrixXd> Pi_hat;  // q x p reduced-form coefficients
    std::vector<std::string> warnings;
};

struct EquationDiagnostics {
    int equation = -1;
    int active_set_size = 0;
    double lambda = 0.0;
    double cv_error = 0.0;
    int iterations = 0;
    bool converged = true;
    bool failed = false;
    std::string error;
    std::vector<std::string> warnings;
};

// Assembled system: Gamma(j,k) is the effect of endogenous j on endogenous k,
// Psi(i,k) the effect of exogenous i on endogenous k (zero outside sets[k]).
struct SystemEstimate {
    Eigen::MatrixXd Gamma;  // p x p, zero diagonal
    Eigen::MatrixXd Psi;    // q x p
    Eigen::VectorXd lambdas;
    Eigen::VectorXd stage1_taus;
    std::vector<EquationDiagnostics> diagnostics;
};

struct EdgeFrequencyRow {
    int source = 0;  // endogenous index of the regulator
    int target = 0;  // endogenous index of the regulated variable
    double mean_effect = 0.0;  // averaged over replicates where selected
    double frequency = 0.0;    // selection count / replicates
    int replicates = 0;        // denominator (valid bootstrap fits)
};

struct EdgeFrequencyTable {
    std::vector<EdgeFrequencyRow> rows;
    int replicates = 0;  // valid bootstrap fits
    int skipped = 0;     // degenerate resamples excluded from the denominator

    // Rows at or above the threshold, original order preserved.
    EdgeFrequencyTable filtered(double threshold) const {
        EdgeFrequencyTable out;
        out.replicates = replicates;
        out.skipped = skipped;
        for (const auto& r : rows)
            if (r.frequency >= threshold) out.rows.push_back(r);
        return out;
    }
};

}  // namespace semforge
