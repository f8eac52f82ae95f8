#pragma once

#include <Eigen/Core>
#include <utility>

namespace semforge {

struct CenteredMatrix {
    Eigen::MatrixXd values;
    Eigen::RowVectorXd means;
};

// Subtracts the column mean from every column; the means are returned so the
// original matrix can be reconstructed. Requires at least one row.
CenteredMatrix center_columns(const Eigen::MatrixXd& M);

}  // namespace semforge
