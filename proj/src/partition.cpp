#include "pumls/partition.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pumls/lsq.hpp"
#include "pumls/parallel.hpp"

namespace pumls {

namespace {

std::vector<std::vector<int>> collect_members(const Eigen::MatrixXd& nodes,
                                              const Eigen::MatrixXd& centers,
                                              double radius) {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(centers.rows()));
    const double r2 = radius * radius;
    for (Eigen::Index k = 0; k < centers.rows(); ++k) {
        auto& list = members[static_cast<std::size_t>(k)];
        for (Eigen::Index i = 0; i < nodes.rows(); ++i)
            if ((nodes.row(i) - centers.row(k)).squaredNorm() < r2)
                list.push_back(static_cast<int>(i));
    }
    return members;
}

}  // namespace

Covering build_covering(const PointSet& points, const DomainBox& box) {
    if (points.dim() != 2 || box.dim() != 2)
        throw std::invalid_argument("regular covering construction requires dim 2");
    const Eigen::Index n = points.size();
    if (n < 4) throw std::invalid_argument("too few nodes for a covering");

    const int m1 = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)) / 2.0));
    const int m = std::max(1, m1);
    const double extent = box.upper[0] - box.lower[0];
    const double radius = std::sqrt(2.0) / m * extent;

    Eigen::MatrixXd centers(static_cast<Eigen::Index>(m) * m, 2);
    Eigen::Index row = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j, ++row) {
            centers(row, 0) = box.lower[0] + (i + 0.5) / m * (box.upper[0] - box.lower[0]);
            centers(row, 1) = box.lower[1] + (j + 0.5) / m * (box.upper[1] - box.lower[1]);
        }

    auto members = collect_members(points.nodes(), centers, radius);
    return Covering{std::move(centers), radius, std::move(members), m, box};
}

Covering build_covering(const PointSet& points, const DomainBox& box,
                        Eigen::MatrixXd centers, double radius) {
    if (centers.cols() != points.dim() || box.dim() != points.dim())
        throw std::invalid_argument("covering dimension mismatch");
    if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
    auto members = collect_members(points.nodes(), centers, radius);
    return Covering{std::move(centers), radius, std::move(members), 0, box};
}

CoveringReport validate_covering(const Covering& cov, const PointSet& points,
                                 const DomainBox& box, int probe_resolution) {
    CoveringReport report;
    report.min_member_count = std::numeric_limits<int>::max();
    for (const auto& list : cov.members)
        report.min_member_count =
            std::min(report.min_member_count, static_cast<int>(list.size()));

    const int dim = points.dim();
    Eigen::Index probes = 1;
    for (int d = 0; d < dim; ++d) probes *= probe_resolution;

    const double r2 = cov.radius * cov.radius;
    report.coverage = true;
    Eigen::VectorXd probe(dim);
    for (Eigen::Index p = 0; p < probes; ++p) {
        Eigen::Index rem = p;
        for (int d = dim - 1; d >= 0; --d) {
            const Eigen::Index k = rem % probe_resolution;
            rem /= probe_resolution;
            probe[d] = box.lower[d] + (box.upper[d] - box.lower[d]) *
                                          static_cast<double>(k) / (probe_resolution - 1);
        }
        int multiplicity = 0;
        for (Eigen::Index k = 0; k < cov.centers.rows(); ++k)
            if ((probe.transpose() - cov.centers.row(k)).squaredNorm() < r2)
                ++multiplicity;
        if (multiplicity == 0) report.coverage = false;
        report.overlap_bound = std::max(report.overlap_bound, multiplicity);
    }
    report.adjacent_overlap = cov.count() == 1 || report.overlap_bound > 1;
    return report;
}

void require_filled(const Covering& cov, int degree) {
    const int dim = static_cast<int>(cov.centers.cols());
    const long needed = basis_size(dim, degree);
    for (std::size_t k = 0; k < cov.members.size(); ++k)
        if (static_cast<long>(cov.members[k].size()) <= needed)
            throw std::runtime_error("underfilled subdomain " + std::to_string(k));
}

PuConfig PuConfig::defaults(int degree, Kernel kernel, const Covering& cov) {
    int m1 = cov.cells_per_axis;
    if (m1 <= 0)
        m1 = std::max(1, static_cast<int>(std::lround(std::sqrt(2.0) / cov.radius)));
    PuConfig config;
    config.degree = degree;
    config.kernel = kernel;
    if (kernel == Kernel::Gaussian)
        config.shape = std::sqrt(2.0) * m1;
    else
        config.shape = m1 / std::sqrt(2.0);
    if (compactly_supported(kernel))
        config.blend_shape = 1.0 / cov.radius;
    else
        config.blend_shape = config.shape;
    return config;
}

PuEvaluator::PuEvaluator(Covering cov, PuConfig config, PointSet data)
    : cov_(std::move(cov)),
      config_(config),
      data_(std::move(data)),
      basis_(data_.dim(), config.degree) {
    if (!data_.has_values())
        throw std::invalid_argument("evaluator requires sampled values");

    if (compactly_supported(config_.kernel)) {
        blend_support_radius_ = 1.0 / config_.blend_shape;
        mls_support_radius_ = 1.0 / config_.shape;
    } else {
        const double r = effective_support_radius(config_.kernel, config_.truncation);
        blend_support_radius_ = r / config_.blend_shape;
        mls_support_radius_ = r / config_.shape;
    }

    const std::size_t m = cov_.members.size();
    local_nodes_.resize(m);
    local_values_.resize(m);
    local_design_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto& list = cov_.members[k];
        Eigen::MatrixXd nodes(static_cast<Eigen::Index>(list.size()), data_.dim());
        Eigen::VectorXd values(static_cast<Eigen::Index>(list.size()));
        for (std::size_t i = 0; i < list.size(); ++i) {
            nodes.row(static_cast<Eigen::Index>(i)) = data_.node(list[i]);
            values[static_cast<Eigen::Index>(i)] = data_.values()[list[i]];
        }
        // Design in shifted-scaled local coordinates for conditioning.
        Eigen::MatrixXd local =
            (nodes.rowwise() - cov_.centers.row(static_cast<Eigen::Index>(k))) /
            cov_.radius;
        local_design_[k] = basis_.design_matrix(local);
        local_nodes_[k] = std::move(nodes);
        local_values_[k] = std::move(values);
    }
}

double PuEvaluator::blend_weight(int k, const Eigen::RowVectorXd& x) const {
    const double dist = (x - cov_.centers.row(k)).norm();
    if (dist >= blend_support_radius_) return 0.0;
    const double v = pumls::evaluate(config_.kernel, config_.blend_shape * dist);
    if (!compactly_supported(config_.kernel) && v <= config_.truncation) return 0.0;
    return v;
}

std::vector<int> PuEvaluator::active_subdomains(const Eigen::RowVectorXd& x) const {
    std::vector<int> active;
    const int m1 = cov_.cells_per_axis;
    if (m1 > 0 && data_.dim() == 2) {
        const double ext0 = cov_.box.upper[0] - cov_.box.lower[0];
        const double ext1 = cov_.box.upper[1] - cov_.box.lower[1];
        const int margin0 = static_cast<int>(std::ceil(blend_support_radius_ * m1 / ext0)) + 1;
        const int margin1 = static_cast<int>(std::ceil(blend_support_radius_ * m1 / ext1)) + 1;
        const int ci = static_cast<int>(std::floor((x[0] - cov_.box.lower[0]) / ext0 * m1));
        const int cj = static_cast<int>(std::floor((x[1] - cov_.box.lower[1]) / ext1 * m1));
        for (int i = std::max(0, ci - margin0); i <= std::min(m1 - 1, ci + margin0); ++i)
            for (int j = std::max(0, cj - margin1); j <= std::min(m1 - 1, cj + margin1); ++j) {
                const int k = i * m1 + j;
                if (blend_weight(k, x) > 0.0) active.push_back(k);
            }
    } else {
        for (int k = 0; k < cov_.count(); ++k)
            if (blend_weight(k, x) > 0.0) active.push_back(k);
    }
    return active;
}

std::vector<std::pair<int, double>> PuEvaluator::shepard_weights(
    const Eigen::RowVectorXd& x) const {
    std::vector<std::pair<int, double>> weights;
    double total = 0.0;
    for (int k : active_subdomains(x)) {
        const double w = blend_weight(k, x);
        weights.emplace_back(k, w);
        total += w;
    }
    if (total <= 0.0) throw std::runtime_error("uncovered evaluation point");
    for (auto& [k, w] : weights) w /= total;
    return weights;
}

double PuEvaluator::local_value(int k, const Eigen::RowVectorXd& x) const {
    const auto& nodes = local_nodes_[static_cast<std::size_t>(k)];
    const auto& values = local_values_[static_cast<std::size_t>(k)];
    const auto& design = local_design_[static_cast<std::size_t>(k)];
    const Eigen::Index nk = nodes.rows();

    Eigen::VectorXd weights(nk);
    const Eigen::RowVectorXd weight_center =
        config_.moving ? x : Eigen::RowVectorXd(cov_.centers.row(k));
    for (Eigen::Index i = 0; i < nk; ++i) {
        const double dist = (nodes.row(i) - weight_center).norm();
        double w = dist >= mls_support_radius_
                       ? 0.0
                       : pumls::evaluate(config_.kernel, config_.shape * dist);
        if (!compactly_supported(config_.kernel) && w <= config_.truncation) w = 0.0;
        weights[i] = w;
    }

    const Eigen::RowVectorXd local_x = (x - cov_.centers.row(k)) / cov_.radius;
    const Eigen::VectorXd px = basis_.evaluate(local_x);
    // Near-degenerate moving stencils (few nodes carrying positive weight)
    // either trip the rank test or survive it with a catastrophic condition
    // number; both cases widen to a unit-weight fit over the member list.
    constexpr double kConditionLimit = 1e8;
    try {
        const FitResult fit = solve_weighted(design, weights, values);
        if (fit.condition <= kConditionLimit) return fit.coefficients.dot(px);
    } catch (const RankDeficientError&) {
    }
    return solve_weighted(design, Eigen::VectorXd::Ones(nk), values)
        .coefficients.dot(px);
}

double PuEvaluator::combine(const Eigen::RowVectorXd& x,
                            const std::vector<std::pair<int, double>>& weights) const {
    double sum = 0.0;
    for (const auto& [k, w] : weights)
        if (w > 0.0) sum += w * local_value(k, x);
    return sum;
}

double PuEvaluator::evaluate(const Eigen::RowVectorXd& x) const {
    return combine(x, shepard_weights(x));
}

std::vector<std::pair<int, double>> PuEvaluator::nonlinear_weights(
    const Eigen::RowVectorXd& x, const Eigen::VectorXd& indicators, double epsilon,
    double t) const {
    if (indicators.size() != cov_.count())
        throw std::invalid_argument("indicator count does not match covering");
    std::vector<std::pair<int, double>> weights;
    double total = 0.0;
    for (int k : active_subdomains(x)) {
        const double phi = blend_weight(k, x);
        double alpha = 0.0;
        if (std::isfinite(indicators[k]))
            alpha = phi / std::pow(epsilon + indicators[k], t);
        weights.emplace_back(k, alpha);
        total += alpha;
    }
    if (total <= 0.0) throw std::runtime_error("uncovered evaluation point");
    for (auto& [k, w] : weights) w /= total;
    return weights;
}

double PuEvaluator::evaluate_nonlinear(const Eigen::RowVectorXd& x,
                                       const Eigen::VectorXd& indicators,
                                       double epsilon, double t) const {
    return combine(x, nonlinear_weights(x, indicators, epsilon, t));
}

Eigen::VectorXd PuEvaluator::evaluate_field(const Eigen::MatrixXd& points) const {
    Eigen::VectorXd out(points.rows());
    parallel_for(points.rows(), [&](std::size_t, Eigen::Index begin, Eigen::Index end) {
        for (Eigen::Index i = begin; i < end; ++i) out[i] = evaluate(points.row(i));
    });
    return out;
}

Eigen::VectorXd PuEvaluator::evaluate_field_nonlinear(
    const Eigen::MatrixXd& points, const Eigen::VectorXd& indicators, double epsilon,
    double t) const {
    Eigen::VectorXd out(points.rows());
    parallel_for(points.rows(), [&](std::size_t, Eigen::Index begin, Eigen::Index end) {
        for (Eigen::Index i = begin; i < end; ++i)
            out[i] = evaluate_nonlinear(points.row(i), indicators, epsilon, t);
    });
    return out;
}

}  // namespace pumls
