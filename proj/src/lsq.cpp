#include "pumls/lsq.hpp"

#include <cmath>
#include <vector>

#include "pumls/poly_basis.hpp"

namespace pumls {

namespace {
constexpr double kRankThreshold = 1e-12;  // relative to largest singular value
}

FitResult solve_weighted(const Eigen::MatrixXd& design,
                         const Eigen::VectorXd& weights,
                         const Eigen::VectorXd& targets) {
    const Eigen::Index n = design.rows();
    const Eigen::Index j = design.cols();
    if (weights.size() != n || targets.size() != n)
        throw std::invalid_argument("inconsistent weighted fit problem");

    std::vector<Eigen::Index> active;
    active.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        if (weights[i] < 0.0)
            throw std::invalid_argument("negative weight");
        if (weights[i] > 0.0) active.push_back(i);
    }
    const Eigen::Index na = static_cast<Eigen::Index>(active.size());
    if (na < j)
        throw RankDeficientError("non-unisolvent weighted stencil",
                                 static_cast<int>(na));

    Eigen::MatrixXd scaled(na, j);
    Eigen::VectorXd rhs(na);
    for (Eigen::Index k = 0; k < na; ++k) {
        const double s = std::sqrt(weights[active[static_cast<std::size_t>(k)]]);
        scaled.row(k) = s * design.row(active[static_cast<std::size_t>(k)]);
        rhs[k] = s * targets[active[static_cast<std::size_t>(k)]];
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = kRankThreshold * sv[0];
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] > cutoff) ++rank;
    if (rank < j)
        throw RankDeficientError("non-unisolvent weighted stencil", rank);

    FitResult result;
    result.coefficients = svd.solve(rhs);
    result.residuals = targets - design * result.coefficients;
    result.condition = sv[0] / sv[sv.size() - 1];
    return result;
}

FitResult solve_unweighted_linear(const Eigen::MatrixXd& nodes,
                                  const Eigen::VectorXd& targets) {
    const int dim = static_cast<int>(nodes.cols());
    if (nodes.rows() < dim + 1)
        throw std::invalid_argument("degenerate indicator stencil");
    const MonomialBasis basis(dim, 1);
    const Eigen::MatrixXd design = basis.design_matrix(nodes);
    try {
        return solve_weighted(design, Eigen::VectorXd::Ones(nodes.rows()), targets);
    } catch (const RankDeficientError& e) {
        throw RankDeficientError("degenerate indicator stencil", e.rank);
    }
}

Eigen::VectorXd solve_spd(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& rhs) {
    if (matrix.rows() != matrix.cols() || matrix.rows() != rhs.size())
        throw std::invalid_argument("inconsistent SPD system");
    Eigen::LLT<Eigen::MatrixXd> llt(matrix);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("kernel matrix not positive definite");
    Eigen::VectorXd x = llt.solve(rhs);
    const double scale = matrix.norm() * x.norm() + rhs.norm();
    if ((matrix * x - rhs).norm() > 1e-8 * scale)
        throw std::runtime_error("kernel matrix not positive definite");
    return x;
}

}  // namespace pumls
