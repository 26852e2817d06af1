#include "pumls/rbf.hpp"

#include "pumls/lsq.hpp"

namespace pumls {

Eigen::MatrixXd kernel_matrix(const ScaledWeight& kernel, const Eigen::MatrixXd& nodes) {
    const Eigen::Index n = nodes.rows();
    Eigen::MatrixXd A(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        A(i, i) = kernel(0.0);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = kernel((nodes.row(i) - nodes.row(j)).norm());
            A(i, j) = v;
            A(j, i) = v;
        }
    }
    return A;
}

RbfInterpolant fit_rbf(const ScaledWeight& kernel, const PointSet& data) {
    const Eigen::MatrixXd A = kernel_matrix(kernel, data.nodes());
    return RbfInterpolant{kernel, data.nodes(), solve_spd(A, data.values())};
}

double eval_rbf(const RbfInterpolant& interp, const Eigen::RowVectorXd& x) {
    if (x.size() != interp.centers.cols())
        throw std::invalid_argument("evaluation point dimension mismatch");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < interp.centers.rows(); ++i)
        sum += interp.coefficients[i] * interp.kernel((x - interp.centers.row(i)).norm());
    return sum;
}

}  // namespace pumls
