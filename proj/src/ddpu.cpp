#include "pumls/ddpu.hpp"

#include <limits>
#include <stdexcept>

#include "pumls/lsq.hpp"

namespace pumls {

double smoothness_indicator(const Eigen::MatrixXd& nodes,
                            const Eigen::VectorXd& targets) {
    if (nodes.rows() <= 3)
        throw std::invalid_argument("indicator stencil too small");
    // Residuals are invariant under the affine shift, which only helps
    // conditioning.
    const Eigen::RowVectorXd center = nodes.colwise().mean();
    const Eigen::MatrixXd shifted = nodes.rowwise() - center;
    const FitResult fit = solve_unweighted_linear(shifted, targets);
    return fit.residuals.cwiseAbs().mean();
}

SmoothnessIndicators compute_indicators(const Covering& cov, const PointSet& data) {
    if (!data.has_values())
        throw std::invalid_argument("indicators require sampled values");
    SmoothnessIndicators out;
    out.values.resize(cov.count());
    out.counts.resize(cov.members.size());
    for (std::size_t k = 0; k < cov.members.size(); ++k) {
        const auto& list = cov.members[k];
        out.counts[k] = static_cast<int>(list.size());
        if (list.size() <= 3) {
            out.values[static_cast<Eigen::Index>(k)] =
                std::numeric_limits<double>::infinity();
            continue;
        }
        Eigen::MatrixXd nodes(static_cast<Eigen::Index>(list.size()), data.dim());
        Eigen::VectorXd targets(static_cast<Eigen::Index>(list.size()));
        for (std::size_t i = 0; i < list.size(); ++i) {
            nodes.row(static_cast<Eigen::Index>(i)) = data.node(list[i]);
            targets[static_cast<Eigen::Index>(i)] = data.values()[list[i]];
        }
        try {
            out.values[static_cast<Eigen::Index>(k)] =
                smoothness_indicator(nodes, targets);
        } catch (const RankDeficientError&) {
            out.values[static_cast<Eigen::Index>(k)] =
                std::numeric_limits<double>::infinity();
        }
    }
    return out;
}

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<std::uint64_t>(n - k + i) /
                 static_cast<std::uint64_t>(i);
    return result;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> weno_optimal_weight_fraction(int r, int k) {
    if (r < 1 || k < 0 || k >= r)
        throw std::invalid_argument("invalid optimal weight index");
    return {binomial(2 * r, 2 * k + 1), std::uint64_t{1} << (2 * r - 1)};
}

std::vector<double> weno_optimal_weights(int r) {
    if (r < 1) throw std::invalid_argument("stencil count must be positive");
    std::vector<double> weights(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        const auto [num, den] = weno_optimal_weight_fraction(r, k);
        weights[static_cast<std::size_t>(k)] =
            static_cast<double>(num) / static_cast<double>(den);
    }
    return weights;
}

}  // namespace pumls
