#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "pumls/kernels.hpp"
#include "pumls/point_set.hpp"
#include "pumls/poly_basis.hpp"

namespace pumls {

// Ball covering of the domain: M centers with a common radius and, per
// subdomain, the indices of the nodes it contains.
struct Covering {
    Eigen::MatrixXd centers;  // M x dim
    double radius;
    std::vector<std::vector<int>> members;
    int cells_per_axis;  // m1 for the regular 2D construction, 0 otherwise
    DomainBox box;

    int count() const { return static_cast<int>(centers.rows()); }
};

// Regular 2D construction: m1 = floor(sqrt(N)/2) centers per axis at cell
// midpoints, radius sqrt(2)/m1 in box units.
Covering build_covering(const PointSet& points, const DomainBox& box);

// Generic variant with caller-chosen centers.
Covering build_covering(const PointSet& points, const DomainBox& box,
                        Eigen::MatrixXd centers, double radius);

struct CoveringReport {
    bool coverage = false;       // every probe point inside >= 1 ball
    int min_member_count = 0;
    int overlap_bound = 0;       // observed K1 over the probe grid
    bool adjacent_overlap = false;
};

CoveringReport validate_covering(const Covering& cov, const PointSet& points,
                                 const DomainBox& box, int probe_resolution = 64);

// Throws "underfilled subdomain k" when a member list has <= basis_size nodes.
void require_filled(const Covering& cov, int degree);

struct PuConfig {
    int degree = 2;
    Kernel kernel = Kernel::Wendland2;
    double shape = 1.0;        // gamma for the moving MLS weights
    double blend_shape = 1.0;  // gamma for the Shepard blend weights
    double truncation = 1e-10; // weights below this are treated as zero
    bool moving = true;        // false: weights centered at the subdomain center

    // Shape parameters from the reference experiment setup: for the Gaussian
    // gamma = sqrt(2) m1, otherwise gamma = m1 / sqrt(2); blend support equal
    // to the subdomain radius for compact kernels.
    static PuConfig defaults(int degree, Kernel kernel, const Covering& cov);
};

// Blended local moving-least-squares evaluation over a covering. Immutable
// after construction; evaluation is pure, so concurrent calls are safe.
class PuEvaluator {
public:
    PuEvaluator(Covering cov, PuConfig config, PointSet data);

    const Covering& covering() const { return cov_; }
    const PuConfig& config() const { return config_; }

    // Raw blend weight delta_k(x) (zero outside support / below truncation).
    double blend_weight(int k, const Eigen::RowVectorXd& x) const;

    // Subdomains with positive blend weight at x.
    std::vector<int> active_subdomains(const Eigen::RowVectorXd& x) const;

    // Normalized Shepard weights over the active set; they sum to one.
    std::vector<std::pair<int, double>> shepard_weights(const Eigen::RowVectorXd& x) const;

    // Local MLS polynomial p_k evaluated at x. Falls back to a unit-weight
    // fit over the whole member list when the moving stencil is rank
    // deficient.
    double local_value(int k, const Eigen::RowVectorXd& x) const;

    // Linear blend: sum_k theta_k(x) p_k(x).
    double evaluate(const Eigen::RowVectorXd& x) const;

    // Data-dependent blend with per-subdomain indicators:
    // W_k proportional to delta_k(x) / (epsilon + I_k)^t.
    double evaluate_nonlinear(const Eigen::RowVectorXd& x,
                              const Eigen::VectorXd& indicators, double epsilon,
                              double t) const;

    std::vector<std::pair<int, double>> nonlinear_weights(
        const Eigen::RowVectorXd& x, const Eigen::VectorXd& indicators,
        double epsilon, double t) const;

    Eigen::VectorXd evaluate_field(const Eigen::MatrixXd& points) const;
    Eigen::VectorXd evaluate_field_nonlinear(const Eigen::MatrixXd& points,
                                             const Eigen::VectorXd& indicators,
                                             double epsilon, double t) const;

private:
    Covering cov_;
    PuConfig config_;
    PointSet data_;
    double blend_support_radius_;
    double mls_support_radius_;  // infinity for untruncated kernels
    std::vector<Eigen::MatrixXd> local_nodes_;    // per k, N_k x dim
    std::vector<Eigen::VectorXd> local_values_;   // per k
    std::vector<Eigen::MatrixXd> local_design_;   // per k, in local coordinates
    MonomialBasis basis_;

    double combine(const Eigen::RowVectorXd& x,
                   const std::vector<std::pair<int, double>>& weights) const;
};

}  // namespace pumls
