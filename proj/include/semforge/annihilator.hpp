#pragma once

#include <Eigen/Core>
#include <vector>

namespace semforge {

// Projection onto the orthogonal complement of span(Xs), applied through an
// orthonormal basis Q: H v = v - Q (Q' v), O(n s) per vector.
class Annihilator {
public:
    // Throws NumericError("collinear instruments...") when Xs is rank
    // deficient; callers may drop dependent columns and retry.
    explicit Annihilator(const Eigen::MatrixXd& Xs);

    Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
    Eigen::MatrixXd apply(const Eigen::MatrixXd& M) const;

    Eigen::Index n() const { return basis_.rows(); }

private:
    Eigen::MatrixXd basis_;  // n x s, orthonormal
};

// Column indices of Xs that form a full-rank subset (pivot order of a
// rank-revealing QR, sorted ascending). Constant or dependent columns are
// left out.
std::vector<int> independent_columns(const Eigen::MatrixXd& Xs);

}  // namespace semforge
