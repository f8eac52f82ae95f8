#include "semforge/validate.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace semforge {

namespace {

ValidationReport fail(std::string msg) {
    ValidationReport r;
    r.ok = false;
    r.message = std::move(msg);
    return r;
}

std::string var_label(const std::vector<std::string>& names, int idx) {
    if (idx >= 0 && idx < static_cast<int>(names.size()) && !names[idx].empty())
        return names[idx] + " (index " + std::to_string(idx) + ")";
    return "index " + std::to_string(idx);
}

}  // namespace

ValidationReport validate(const DataSet& ds, const ExoAssignment& ea) {
    const Eigen::Index n = ds.Y.rows();
    const Eigen::Index p = ds.Y.cols();
    const Eigen::Index q = ds.X.cols();

    if (n < 2) return fail("need at least 2 observations, got " + std::to_string(n));
    if (p < 1) return fail("need at least 1 endogenous variable");
    if (q < 1) return fail("need at least 1 exogenous variable");
    if (ds.X.rows() != n)
        return fail("row count mismatch: Y has " + std::to_string(n) + " rows, X has " +
                    std::to_string(ds.X.rows()));
    if (!ds.endo_names.empty() && static_cast<Eigen::Index>(ds.endo_names.size()) != p)
        return fail("endogenous name count " + std::to_string(ds.endo_names.size()) +
                    " does not match Y columns " + std::to_string(p));
    if (!ds.exo_names.empty() && static_cast<Eigen::Index>(ds.exo_names.size()) != q)
        return fail("exogenous name count " + std::to_string(ds.exo_names.size()) +
                    " does not match X columns " + std::to_string(q));

    if (!ds.Y.allFinite()) return fail("Y contains non-finite entries");
    if (!ds.X.allFinite()) return fail("X contains non-finite entries");

    if (static_cast<Eigen::Index>(ea.sets.size()) != p)
        return fail("assignment has " + std::to_string(ea.sets.size()) +
                    " instrument sets, expected one per endogenous variable (" +
                    std::to_string(p) + ")");

    // owner[i] = which endogenous variable claimed exogenous column i.
    std::vector<int> owner(static_cast<std::size_t>(q), -1);
    for (Eigen::Index k = 0; k < p; ++k) {
        const auto& set = ea.sets[static_cast<std::size_t>(k)];
        if (set.empty())
            return fail("instrument set for " + var_label(ds.endo_names, static_cast<int>(k)) +
                        " is empty");
        for (int idx : set) {
            if (idx < 0 || idx >= q)
                return fail("instrument index " + std::to_string(idx) + " for " +
                            var_label(ds.endo_names, static_cast<int>(k)) + " is out of range [0, " +
                            std::to_string(q) + ")");
            if (owner[static_cast<std::size_t>(idx)] >= 0)
                return fail("overlap at exogenous " + var_label(ds.exo_names, idx) +
                            ": assigned to both " +
                            var_label(ds.endo_names, owner[static_cast<std::size_t>(idx)]) +
                            " and " + var_label(ds.endo_names, static_cast<int>(k)));
            owner[static_cast<std::size_t>(idx)] = static_cast<int>(k);
        }
    }

    ValidationReport r;
    for (Eigen::Index i = 0; i < q; ++i) {
        const double spread = ds.X.col(i).maxCoeff() - ds.X.col(i).minCoeff();
        if (spread == 0.0)
            r.warnings.push_back("exogenous " + var_label(ds.exo_names, static_cast<int>(i)) +
                                 " is constant and carries no information after centering");
    }
    return r;
}

}  // namespace semforge
