#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pumls {

// Axis-aligned box, lower < upper componentwise.
struct DomainBox {
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    DomainBox(Eigen::VectorXd lo, Eigen::VectorXd up);

    static DomainBox unit(int dim);
    int dim() const { return static_cast<int>(lower.size()); }
};

// Immutable set of pairwise-distinct nodes in R^n, optionally carrying
// sampled function values.
class PointSet {
public:
    PointSet(int dim, Eigen::MatrixXd nodes);
    PointSet(int dim, Eigen::MatrixXd nodes, Eigen::VectorXd values);

    int dim() const { return dim_; }
    Eigen::Index size() const { return nodes_.rows(); }
    const Eigen::MatrixXd& nodes() const { return nodes_; }
    Eigen::RowVectorXd node(Eigen::Index i) const { return nodes_.row(i); }

    bool has_values() const { return values_.has_value(); }
    const Eigen::VectorXd& values() const;

    PointSet with_values(Eigen::VectorXd values) const;

private:
    int dim_;
    Eigen::MatrixXd nodes_;
    std::optional<Eigen::VectorXd> values_;
};

// Tensor grid {(i_1/2^l, ..., i_n/2^l)}, (2^l+1)^dim nodes in lexicographic
// order (first coordinate slowest).
PointSet uniform_grid(int level, int dim);

// Halton sequence with prime bases 2, 3, 5, ...; index starts at 1 so the
// all-zeros point is never emitted.
PointSet halton_points(Eigen::Index count, int dim);

// Probe-grid estimate of sup_x min_i ||x - x_i|| over `box`.
double fill_distance(const PointSet& points, const DomainBox& box,
                     int probe_resolution = 200);

// (1/2) min_{i != j} ||x_i - x_j||.
double separation_distance(const PointSet& points);

// fill distance / separation distance on the same set.
double quasi_uniformity_ratio(const PointSet& points, const DomainBox& box,
                              int probe_resolution = 200);

// CSV: one row per node, "x_1,...,x_n[,f]", optional header line.
void write_points_csv(const PointSet& points, const std::string& path,
                      bool header = false);
PointSet read_points_csv(const std::string& path, int dim, bool with_values);

}  // namespace pumls
