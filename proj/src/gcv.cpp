#include "semforge/gcv.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "semforge/common.hpp"

namespace semforge {

namespace {

struct ResponseProjection {
    Eigen::VectorXd uty;   // U^T y
    double yty;            // ||y||^2
    Eigen::Index n;
};

ResponseProjection project_response(const DesignFactorization& fact, const Eigen::VectorXd& y) {
    return {fact.U.transpose() * y, y.squaredNorm(), fact.n()};
}

// Residual sum of squares splits into the part of y orthogonal to the column
// space plus the shrunk in-space part; both terms are nonnegative.
double gcv_from_projection(const ResponseProjection& proj, const Eigen::VectorXd& d, double tau) {
    double in_space = 0.0;
    double trace = 0.0;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        const double d2 = d(i) * d(i);
        const double shrink = d2 / (d2 + tau);       // eigenvalue of P_tau
        const double miss = tau / (d2 + tau);        // 1 - shrink
        in_space += miss * miss * proj.uty(i) * proj.uty(i);
        trace += shrink;
    }
    const double out_of_space = std::max(0.0, proj.yty - proj.uty.squaredNorm());
    const double denom = static_cast<double>(proj.n) - trace;
    if (denom <= 1e-10)
        throw NumericError("gcv_value: degenerate denominator, n - tr(P_tau) <= 1e-10");
    const double rss = out_of_space + in_space;
    return rss / (denom * denom);
}

}  // namespace

void GcvSearchConfig::check() const {
    if (tau_min && *tau_min <= 0.0) throw ValidationError("gcv: tau_min must be positive");
    if (tau_min && tau_max && !(*tau_min < *tau_max))
        throw ValidationError("gcv: tau_min must be below tau_max");
    if (grid_points < 8) throw ValidationError("gcv: need at least 8 grid points");
    if (refine_tolerance <= 0.0) throw ValidationError("gcv: refine_tolerance must be positive");
}

std::pair<double, double> GcvSearchConfig::resolved_bounds(const DesignFactorization& fact) const {
    const double d_max = fact.singular_values(0);
    const double d_min = fact.singular_values(fact.rank - 1);
    const double lo = tau_min.value_or(1e-4 * d_min * d_min);
    const double hi = tau_max.value_or(1e4 * d_max * d_max);
    if (!(lo > 0.0) || !(lo < hi))
        throw ValidationError("gcv: resolved search domain is empty");
    return {lo, hi};
}

double gcv_value(const DesignFactorization& fact, const Eigen::VectorXd& y, double tau) {
    if (!(tau > 0.0)) throw ValidationError("gcv_value: tau must be positive");
    return gcv_from_projection(project_response(fact, y), fact.singular_values, tau);
}

double select_tau(const DesignFactorization& fact, const Eigen::VectorXd& y,
                  const GcvSearchConfig& cfg) {
    cfg.check();
    const auto [lo, hi] = cfg.resolved_bounds(fact);
    const ResponseProjection proj = project_response(fact, y);
    const Eigen::VectorXd& d = fact.singular_values;

    const double t_lo = std::log(lo);
    const double t_hi = std::log(hi);
    const int m = cfg.grid_points;

    std::vector<double> values(static_cast<std::size_t>(m));
    int best = 0;
    double v_min = 0.0, v_max = 0.0;
    for (int i = 0; i < m; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (m - 1);
        const double v = gcv_from_projection(proj, d, std::exp(t));
        values[static_cast<std::size_t>(i)] = v;
        if (i == 0) {
            v_min = v_max = v;
        } else {
            v_min = std::min(v_min, v);
            v_max = std::max(v_max, v);
            if (v < values[static_cast<std::size_t>(best)]) best = i;
        }
    }

    // Uninformative curve: smallest penalty, i.e. minimal shrinkage.
    if (v_max - v_min <= 1e-12 * v_min) return lo;

    // Golden-section in log space on the bracket around the grid minimizer.
    const auto grid_t = [&](int i) { return t_lo + (t_hi - t_lo) * i / (m - 1); };
    double a = grid_t(std::max(best - 1, 0));
    double b = grid_t(std::min(best + 1, m - 1));

    constexpr double kInvPhi = 0.6180339887498948482;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = gcv_from_projection(proj, d, std::exp(x1));
    double f2 = gcv_from_projection(proj, d, std::exp(x2));

    const double t_tol = std::log1p(cfg.refine_tolerance);
    while (b - a > t_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = gcv_from_projection(proj, d, std::exp(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = gcv_from_projection(proj, d, std::exp(x2));
        }
    }
    return std::exp(f1 <= f2 ? x1 : x2);
}

}  // namespace semforge
