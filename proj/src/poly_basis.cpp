#include "pumls/poly_basis.hpp"

#include <stdexcept>

namespace pumls {

long basis_size(int dim, int degree) {
    if (dim < 1 || degree < 0)
        throw std::invalid_argument("invalid basis parameters");
    long result = 1;
    for (int i = 1; i <= dim; ++i)
        result = result * (degree + i) / i;
    return result;
}

namespace {

// Multi-indices of total degree `total` in lexicographic-descending order of
// the leading exponent, matching the 1, x, y, x^2, xy, y^2 convention.
void emit_degree(int dim, int total, std::vector<int>& current,
                 std::vector<std::vector<int>>& out) {
    if (dim == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = total; e >= 0; --e) {
        current.push_back(e);
        emit_degree(dim - 1, total - e, current, out);
        current.pop_back();
    }
}

}  // namespace

MonomialBasis::MonomialBasis(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || degree < 0)
        throw std::invalid_argument("invalid basis parameters");
    std::vector<int> current;
    for (int t = 0; t <= degree; ++t)
        emit_degree(dim, t, current, exponents_);
}

Eigen::VectorXd MonomialBasis::evaluate(const Eigen::RowVectorXd& x) const {
    if (x.size() != dim_)
        throw std::invalid_argument("point dimension does not match basis");
    Eigen::VectorXd out(size());
    for (int j = 0; j < size(); ++j) {
        double v = 1.0;
        for (int d = 0; d < dim_; ++d)
            for (int e = 0; e < exponents_[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)]; ++e)
                v *= x[d];
        out[j] = v;
    }
    return out;
}

Eigen::MatrixXd MonomialBasis::design_matrix(const Eigen::MatrixXd& nodes) const {
    if (nodes.cols() != dim_)
        throw std::invalid_argument("node dimension does not match basis");
    Eigen::MatrixXd E(nodes.rows(), size());
    for (Eigen::Index i = 0; i < nodes.rows(); ++i)
        E.row(i) = evaluate(nodes.row(i)).transpose();
    return E;
}

}  // namespace pumls
