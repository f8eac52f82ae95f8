#include "semforge/design_svd.hpp"

#include <Eigen/SVD>

#include "semforge/common.hpp"

namespace semforge {

DesignFactorization decompose_design(const Eigen::MatrixXd& Xc) {
    if (Xc.rows() == 0 || Xc.cols() == 0)
        throw NumericError("decompose_design: empty design matrix");

    Eigen::BDCSVD<Eigen::MatrixXd> svd(Xc, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& d = svd.singularValues();
    if (d.size() == 0 || d(0) <= 0.0)
        throw NumericError("decompose_design: design matrix is zero");

    const double cutoff = 1e-12 * d(0);
    Eigen::Index r = 0;
    while (r < d.size() && d(r) > cutoff) ++r;
    if (r == 0) throw NumericError("decompose_design: design matrix is zero");

    DesignFactorization fact;
    fact.U = svd.matrixU().leftCols(r);
    fact.V = svd.matrixV().leftCols(r);
    fact.singular_values = d.head(r);
    fact.rank = r;
    return fact;
}

}  // namespace semforge
