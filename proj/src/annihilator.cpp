#include "semforge/annihilator.hpp"

#include <Eigen/QR>
#include <algorithm>

#include "semforge/common.hpp"

namespace semforge {

Annihilator::Annihilator(const Eigen::MatrixXd& Xs) {
    if (Xs.cols() == 0) throw NumericError("annihilator: no instrument columns");
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
    if (qr.rank() < Xs.cols())
        throw NumericError("collinear instruments: rank " + std::to_string(qr.rank()) +
                           " < " + std::to_string(Xs.cols()) + " columns");
    basis_ = qr.householderQ() * Eigen::MatrixXd::Identity(Xs.rows(), Xs.cols());
}

Eigen::VectorXd Annihilator::apply(const Eigen::VectorXd& v) const {
    return v - basis_ * (basis_.transpose() * v);
}

Eigen::MatrixXd Annihilator::apply(const Eigen::MatrixXd& M) const {
    return M - basis_ * (basis_.transpose() * M);
}

std::vector<int> independent_columns(const Eigen::MatrixXd& Xs) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
    const Eigen::Index r = qr.rank();
    std::vector<int> kept;
    kept.reserve(static_cast<std::size_t>(r));
    for (Eigen::Index i = 0; i < r; ++i)
        kept.push_back(static_cast<int>(qr.colsPermutation().indices()(i)));
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace semforge
