#include <doctest.h>

#include <cmath>
#include <random>

#include "pumls/lsq.hpp"
#include "pumls/partition.hpp"

using namespace pumls;

namespace {

PointSet make_random_data(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::MatrixXd nodes(n, 2);
    Eigen::VectorXd values(n);
    for (Eigen::Index i = 0; i < nodes.size(); ++i) nodes.data()[i] = unif(rng);
    for (int i = 0; i < n; ++i) values[i] = unif(rng);
    return PointSet(2, nodes, values);
}

Eigen::VectorXd polynomial_values(const Eigen::MatrixXd& nodes,
                                  const MonomialBasis& basis,
                                  const Eigen::VectorXd& coeffs) {
    return basis.design_matrix(nodes) * coeffs;
}

}  // namespace

TEST_CASE("regular covering follows the m1 = floor(sqrt(N)/2) construction") {
    const PointSet grid = uniform_grid(4, 2);  // 289 nodes
    const Covering cov = build_covering(grid, DomainBox::unit(2));
    CHECK(cov.cells_per_axis == 8);
    CHECK(cov.count() == 64);
    CHECK(cov.radius == doctest::Approx(std::sqrt(2.0) / 8.0));
    for (const auto& list : cov.members) CHECK(list.size() > 6);

    // Every node appears in at least one member list.
    std::vector<int> seen(static_cast<std::size_t>(grid.size()), 0);
    for (const auto& list : cov.members)
        for (int i : list) seen[static_cast<std::size_t>(i)] = 1;
    for (int s : seen) CHECK(s == 1);
}

TEST_CASE("four nodes give the degenerate single-ball covering") {
    Eigen::MatrixXd nodes(4, 2);
    nodes << 0.1, 0.1, 0.9, 0.1, 0.1, 0.9, 0.9, 0.9;
    const Covering cov = build_covering(PointSet(2, nodes), DomainBox::unit(2));
    CHECK(cov.count() == 1);
    CHECK(cov.radius == doctest::Approx(std::sqrt(2.0)));
    CHECK(cov.members[0].size() == 4);
    const auto report = validate_covering(cov, PointSet(2, nodes), DomainBox::unit(2));
    CHECK(report.coverage);
    CHECK(report.overlap_bound == 1);
}

TEST_CASE("coverage and overlap of the regular construction") {
    const PointSet grid = uniform_grid(4, 2);
    const DomainBox box = DomainBox::unit(2);
    const Covering cov = build_covering(grid, box);
    const auto report = validate_covering(cov, grid, box);
    CHECK(report.coverage);
    CHECK(report.min_member_count > 6);
    CHECK(report.adjacent_overlap);
    CHECK(report.overlap_bound >= 2);

    // Shrinking the radius below the half-cell diagonal breaks coverage.
    Covering shrunk = build_covering(grid, box, cov.centers, cov.radius / 3.0);
    CHECK_FALSE(validate_covering(shrunk, grid, box).coverage);
}

TEST_CASE("underfilled subdomains are rejected") {
    const PointSet grid = uniform_grid(4, 2);
    const Covering cov = build_covering(grid, DomainBox::unit(2));
    CHECK_NOTHROW(require_filled(cov, 2));
    // Tiny balls around the same centers contain no nodes at all.
    const Covering empty =
        build_covering(grid, DomainBox::unit(2), cov.centers, 1e-6);
    CHECK_THROWS_WITH(require_filled(empty, 2), "underfilled subdomain 0");
}

TEST_CASE("shepard weights form a partition of unity") {
    const PointSet data = make_random_data(400, 71);
    const Covering cov = build_covering(data, DomainBox::unit(2));
    const PuConfig config = PuConfig::defaults(2, Kernel::Wendland2, cov);
    const PuEvaluator eval(cov, config, data);

    std::mt19937 rng(73);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::RowVector2d x(unif(rng), unif(rng));
        const auto weights = eval.shepard_weights(x);
        double sum = 0.0;
        for (const auto& [k, w] : weights) {
            CHECK(w >= 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("isolated center takes the whole weight") {
    Eigen::MatrixXd nodes(6, 2);
    nodes << 0.1, 0.1, 0.2, 0.1, 0.1, 0.2, 0.2, 0.2, 0.15, 0.12, 0.12, 0.17;
    Eigen::MatrixXd centers(2, 2);
    centers << 0.15, 0.15, 0.85, 0.85;
    const PointSet data(2, nodes, Eigen::VectorXd::Ones(6));
    const Covering cov =
        build_covering(data, DomainBox::unit(2), centers, 0.2);
    PuConfig config = PuConfig::defaults(1, Kernel::Wendland2, cov);
    const PuEvaluator eval(cov, config, data);
    const auto weights = eval.shepard_weights(Eigen::RowVector2d(0.15, 0.15));
    REQUIRE(weights.size() == 1);
    CHECK(weights[0].first == 0);
    CHECK(weights[0].second == doctest::Approx(1.0));

    // Equidistant from both centers with equal shapes: symmetric split.
    const Covering wide =
        build_covering(data, DomainBox::unit(2), centers, 0.8);
    const PuEvaluator eval2(wide, PuConfig::defaults(1, Kernel::Wendland2, wide), data);
    const auto mid = eval2.shepard_weights(Eigen::RowVector2d(0.5, 0.5));
    REQUIRE(mid.size() == 2);
    CHECK(mid[0].second == doctest::Approx(0.5));
    CHECK(mid[1].second == doctest::Approx(0.5));
}

TEST_CASE("uncovered evaluation point is reported") {
    Eigen::MatrixXd nodes(6, 2);
    nodes << 0.1, 0.1, 0.2, 0.1, 0.1, 0.2, 0.2, 0.2, 0.15, 0.12, 0.12, 0.17;
    Eigen::MatrixXd centers(1, 2);
    centers << 0.15, 0.15;
    const PointSet data(2, nodes, Eigen::VectorXd::Ones(6));
    const Covering cov = build_covering(data, DomainBox::unit(2), centers, 0.2);
    const PuEvaluator eval(cov, PuConfig::defaults(1, Kernel::Wendland2, cov), data);
    CHECK_THROWS_WITH(eval.evaluate(Eigen::RowVector2d(0.9, 0.9)),
                      "uncovered evaluation point");
}

TEST_CASE("local fits reproduce polynomials of the configured degree") {
    std::mt19937 rng(79);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int degree : {1, 2}) {
        const MonomialBasis basis(2, degree);
        Eigen::VectorXd coeffs(basis.size());
        for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs[i] = unif(rng);

        PointSet raw = make_random_data(300, 83);
        const PointSet data =
            PointSet(2, raw.nodes(), polynomial_values(raw.nodes(), basis, coeffs));
        const Covering cov = build_covering(data, DomainBox::unit(2));
        const PuConfig config = PuConfig::defaults(degree, Kernel::Wendland2, cov);
        const PuEvaluator eval(cov, config, data);

        for (int trial = 0; trial < 50; ++trial) {
            Eigen::RowVector2d x(0.5 * (unif(rng) + 1.0), 0.5 * (unif(rng) + 1.0));
            const double expected =
                basis.evaluate(x).dot(coeffs);
            CHECK(eval.evaluate(x) ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("constant data is reproduced exactly") {
    PointSet raw = make_random_data(200, 89);
    const PointSet data(2, raw.nodes(), Eigen::VectorXd::Constant(200, 4.25));
    const Covering cov = build_covering(data, DomainBox::unit(2));
    const PuEvaluator eval(cov, PuConfig::defaults(2, Kernel::Wendland2, cov), data);
    CHECK(eval.evaluate(Eigen::RowVector2d(0.37, 0.61)) == doctest::Approx(4.25));
    CHECK(eval.local_value(0, Eigen::RowVector2d(0.1, 0.1)) == doctest::Approx(4.25));
}

TEST_CASE("single subdomain matches the global weighted fit") {
    const PointSet data = make_random_data(40, 97);
    Eigen::MatrixXd center(1, 2);
    center << 0.5, 0.5;
    const Covering cov =
        build_covering(data, DomainBox::unit(2), center, 2.0);
    REQUIRE(cov.members[0].size() == 40);
    PuConfig config;
    config.degree = 1;
    config.kernel = Kernel::Gaussian;  // strictly positive everywhere
    config.shape = 1.5;
    config.blend_shape = 1.5;
    config.truncation = 1e-300;
    const PuEvaluator eval(cov, config, data);

    const Eigen::RowVector2d x = data.node(7);
    // Independent path: weighted fit in the same local coordinates.
    const MonomialBasis basis(2, 1);
    const Eigen::MatrixXd local =
        (data.nodes().rowwise() - center.row(0)) / cov.radius;
    Eigen::VectorXd w(40);
    for (int i = 0; i < 40; ++i)
        w[i] = std::exp(-std::pow(1.5 * (data.node(i) - x).norm(), 2));
    const FitResult fit =
        solve_weighted(basis.design_matrix(local), w, data.values());
    const Eigen::RowVector2d lx = (x - center.row(0)) / cov.radius;
    const double expected = basis.evaluate(lx).dot(fit.coefficients);
    CHECK(eval.local_value(0, x) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("blend is a convex combination of the local fits") {
    const PointSet data = make_random_data(300, 101);
    const Covering cov = build_covering(data, DomainBox::unit(2));
    const PuEvaluator eval(cov, PuConfig::defaults(2, Kernel::Wendland4, cov), data);
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> unif(0.05, 0.95);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::RowVector2d x(unif(rng), unif(rng));
        const auto weights = eval.shepard_weights(x);
        double lo = 1e300, hi = -1e300;
        for (const auto& [k, w] : weights) {
            const double p = eval.local_value(k, x);
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        const double v = eval.evaluate(x);
        CHECK(v >= lo - 1e-10);
        CHECK(v <= hi + 1e-10);
    }
}

TEST_CASE("blended surface has bounded second differences") {
    const PointSet data = make_random_data(400, 107);
    const Covering cov = build_covering(data, DomainBox::unit(2));
    const PuEvaluator eval(cov, PuConfig::defaults(2, Kernel::Wendland2, cov), data);
    const Eigen::RowVector2d x(0.43, 0.57);
    double prev = 0.0;
    for (double s : {1e-2, 5e-3, 2.5e-3}) {
        const double d2 =
            (eval.evaluate(x + Eigen::RowVector2d(s, 0)) - 2.0 * eval.evaluate(x) +
             eval.evaluate(x - Eigen::RowVector2d(s, 0))) /
            (s * s);
        CHECK(std::isfinite(d2));
        if (prev != 0.0) CHECK(std::abs(d2) < 10.0 * std::abs(prev) + 100.0);
        prev = d2;
    }
}
