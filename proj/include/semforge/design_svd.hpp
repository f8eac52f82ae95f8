#pragma once

#include <Eigen/Core>

namespace semforge {

// Thin SVD of the centered design, computed once and shared by every response
// column and every penalty evaluation. Only directions with singular value
// above 1e-12 * d_max are retained.
struct DesignFactorization {
    Eigen::MatrixXd U;               // n x r, orthonormal columns
    Eigen::MatrixXd V;               // q x r, orthonormal columns
    Eigen::VectorXd singular_values; // r, descending, all positive
    Eigen::Index rank = 0;

    Eigen::Index n() const { return U.rows(); }
    Eigen::Index q() const { return V.rows(); }
};

// Throws NumericError when Xc is (numerically) the zero matrix.
DesignFactorization decompose_design(const Eigen::MatrixXd& Xc);

}  // namespace semforge
