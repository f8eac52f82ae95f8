#include "semforge/center.hpp"

#include <stdexcept>

namespace semforge {

CenteredMatrix center_columns(const Eigen::MatrixXd& M) {
    if (M.rows() < 1) throw std::invalid_argument("center_columns: matrix has no rows");
    CenteredMatrix out;
    out.means = M.colwise().mean();
    out.values = M.rowwise() - out.means;
    return out;
}

}  // namespace semforge
