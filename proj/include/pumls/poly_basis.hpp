#pragma once

#include <Eigen/Dense>
#include <vector>

namespace pumls {

long basis_size(int dim, int degree);

// Monomial basis of Pi_degree(R^dim) in graded lexicographic order,
// so dim 2 degree 2 reads 1, x, y, x^2, xy, y^2.
class MonomialBasis {
public:
    MonomialBasis(int dim, int degree);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(exponents_.size()); }
    const std::vector<std::vector<int>>& exponents() const { return exponents_; }

    Eigen::VectorXd evaluate(const Eigen::RowVectorXd& x) const;

    // Row i holds the basis evaluated at node i.
    Eigen::MatrixXd design_matrix(const Eigen::MatrixXd& nodes) const;

private:
    int dim_;
    int degree_;
    std::vector<std::vector<int>> exponents_;
};

}  // namespace pumls
