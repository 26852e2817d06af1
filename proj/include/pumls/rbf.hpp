#pragma once

#include <Eigen/Dense>

#include "pumls/kernels.hpp"
#include "pumls/point_set.hpp"

namespace pumls {

// Global kernel interpolant sum_i c_i phi(gamma ||x - x_i||).
struct RbfInterpolant {
    ScaledWeight kernel;
    Eigen::MatrixXd centers;
    Eigen::VectorXd coefficients;
};

RbfInterpolant fit_rbf(const ScaledWeight& kernel, const PointSet& data);

double eval_rbf(const RbfInterpolant& interp, const Eigen::RowVectorXd& x);

// Symmetric kernel matrix A_ij = phi(gamma ||x_i - x_j||).
Eigen::MatrixXd kernel_matrix(const ScaledWeight& kernel, const Eigen::MatrixXd& nodes);

}  // namespace pumls
