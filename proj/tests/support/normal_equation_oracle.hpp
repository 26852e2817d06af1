#pragma once

// Independent reference solver for weighted least squares: explicit normal
// equations (E^T D E) c = E^T D f, kept deliberately separate from the
// library's factorization path.

#include <Eigen/Dense>

namespace oracle {

inline Eigen::VectorXd normal_equation_solve(const Eigen::MatrixXd& design,
                                             const Eigen::VectorXd& weights,
                                             const Eigen::VectorXd& targets) {
    const Eigen::MatrixXd dE = weights.asDiagonal() * design;
    const Eigen::MatrixXd gram = design.transpose() * dE;
    const Eigen::VectorXd rhs = dE.transpose() * targets;
    return gram.ldlt().solve(rhs);
}

}  // namespace oracle
