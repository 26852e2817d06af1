#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "pumls/partition.hpp"
#include "pumls/point_set.hpp"

namespace pumls {

// Per-subdomain mean absolute residual of the unit-weight degree-1 fit.
// Subdomains with fewer than four nodes carry an infinite sentinel and are
// excluded from the nonlinear blend.
struct SmoothnessIndicators {
    Eigen::VectorXd values;
    std::vector<int> counts;
};

// Indicator for one stencil; requires more than three nodes.
double smoothness_indicator(const Eigen::MatrixXd& nodes,
                            const Eigen::VectorXd& targets);

SmoothnessIndicators compute_indicators(const Covering& cov, const PointSet& data);

struct NonlinearConfig {
    double epsilon = 1e-6;
    double t = 2.0;
};

// C_k^r = binom(2r, 2k+1) / 2^(2r-1), k = 0..r-1; sums to one.
std::vector<double> weno_optimal_weights(int r);

// Exact numerator/denominator of C_k^r.
std::pair<std::uint64_t, std::uint64_t> weno_optimal_weight_fraction(int r, int k);

}  // namespace pumls
