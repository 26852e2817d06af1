#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace pumls {

struct FitResult {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd residuals;  // targets - design * coefficients, all rows
    double condition;           // extreme singular value ratio of sqrt(D) E
};

struct RankDeficientError : std::runtime_error {
    int rank;
    explicit RankDeficientError(const std::string& what, int r)
        : std::runtime_error(what), rank(r) {}
};

// Minimizes sum_i w_i (f_i - (E c)_i)^2 through an orthogonal factorization of
// the row-scaled system sqrt(D) E. Zero-weight rows are dropped before
// factoring; residuals are still reported for every row.
FitResult solve_weighted(const Eigen::MatrixXd& design,
                         const Eigen::VectorXd& weights,
                         const Eigen::VectorXd& targets);

// Unit-weight degree-1 fit over raw node coordinates; the indicator fit.
FitResult solve_unweighted_linear(const Eigen::MatrixXd& nodes,
                                  const Eigen::VectorXd& targets);

// Symmetric positive-definite solve (Cholesky).
Eigen::VectorXd solve_spd(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& rhs);

}  // namespace pumls
