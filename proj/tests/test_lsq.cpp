#include <doctest.h>

#include <random>

#include "pumls/lsq.hpp"
#include "pumls/poly_basis.hpp"
#include "support/normal_equation_oracle.hpp"

using namespace pumls;

TEST_CASE("constant targets reproduce exactly") {
    const MonomialBasis basis(2, 1);
    Eigen::MatrixXd nodes(4, 2);
    nodes << 0, 0, 1, 0, 0, 1, 1, 1;
    const Eigen::MatrixXd E = basis.design_matrix(nodes);
    Eigen::VectorXd w(4);
    w << 0.2, 1.0, 3.0, 0.5;
    const FitResult fit = solve_weighted(E, w, Eigen::VectorXd::Constant(4, 5.0));
    CHECK(fit.coefficients[0] == doctest::Approx(5.0));
    CHECK(fit.coefficients.tail(2).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(fit.residuals.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("degree-1 polynomial targets leave no residual") {
    const MonomialBasis basis(2, 1);
    Eigen::MatrixXd nodes(5, 2);
    nodes << 0, 0, 1, 0, 0, 1, 0.3, 0.7, 0.9, 0.2;
    Eigen::VectorXd targets(5);
    for (int i = 0; i < 5; ++i)
        targets[i] = 1.0 + 2.0 * nodes(i, 0) - nodes(i, 1);
    const FitResult fit = solve_weighted(basis.design_matrix(nodes),
                                         Eigen::VectorXd::Ones(5), targets);
    CHECK(fit.residuals.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(fit.coefficients[0] == doctest::Approx(1.0));
    CHECK(fit.coefficients[1] == doctest::Approx(2.0));
    CHECK(fit.coefficients[2] == doctest::Approx(-1.0));
}

TEST_CASE("matches the normal-equation oracle") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const MonomialBasis basis(2, 1);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::MatrixXd nodes(6, 2);
        Eigen::VectorXd targets(6), w(6);
        for (Eigen::Index i = 0; i < nodes.size(); ++i) nodes.data()[i] = unif(rng);
        for (int i = 0; i < 6; ++i) {
            targets[i] = unif(rng);
            w[i] = 0.1 + unif(rng);
        }
        const Eigen::MatrixXd E = basis.design_matrix(nodes);
        const FitResult fit = solve_weighted(E, w, targets);
        const Eigen::VectorXd ref = oracle::normal_equation_solve(E, w, targets);
        CHECK((fit.coefficients - ref).norm() < 1e-10 * (1.0 + ref.norm()));
    }
}

TEST_CASE("weights are scale free") {
    const MonomialBasis basis(2, 2);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::MatrixXd nodes(10, 2);
    Eigen::VectorXd targets(10), w(10);
    for (Eigen::Index i = 0; i < nodes.size(); ++i) nodes.data()[i] = unif(rng);
    for (int i = 0; i < 10; ++i) {
        targets[i] = unif(rng);
        w[i] = unif(rng) + 0.01;
    }
    const Eigen::MatrixXd E = basis.design_matrix(nodes);
    const Eigen::VectorXd base = solve_weighted(E, w, targets).coefficients;
    for (double lambda : {1e-3, 0.5, 7.0, 1e4}) {
        const Eigen::VectorXd scaled =
            solve_weighted(E, lambda * w, targets).coefficients;
        CHECK((scaled - base).norm() < 1e-10 * (1.0 + base.norm()));
    }
}

TEST_CASE("residual orthogonality E^T D r = 0") {
    const MonomialBasis basis(2, 1);
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::MatrixXd nodes(8, 2);
    Eigen::VectorXd targets(8), w(8);
    for (Eigen::Index i = 0; i < nodes.size(); ++i) nodes.data()[i] = unif(rng);
    for (int i = 0; i < 8; ++i) {
        targets[i] = unif(rng);
        w[i] = unif(rng);
    }
    const Eigen::MatrixXd E = basis.design_matrix(nodes);
    const FitResult fit = solve_weighted(E, w, targets);
    const Eigen::VectorXd orth =
        E.transpose() * (w.asDiagonal() * fit.residuals);
    CHECK(orth.cwiseAbs().maxCoeff() < 1e-10 * (1.0 + targets.norm()));
}

TEST_CASE("zero-weight rows are dropped, rank failures reported") {
    const MonomialBasis basis(2, 1);
    Eigen::MatrixXd nodes(5, 2);
    nodes << 0, 0, 1, 0, 0, 1, 0.5, 0.5, 0.2, 0.8;
    const Eigen::MatrixXd E = basis.design_matrix(nodes);
    Eigen::VectorXd w(5);
    // Positive weight only on three collinear nodes: x + y = 1.
    w << 0, 1, 1, 1, 0;
    CHECK_THROWS_AS(solve_weighted(E, w, Eigen::VectorXd::Ones(5)),
                    RankDeficientError);
    try {
        solve_weighted(E, w, Eigen::VectorXd::Ones(5));
    } catch (const RankDeficientError& e) {
        CHECK(e.rank == 2);
        CHECK(std::string(e.what()) == "non-unisolvent weighted stencil");
    }
}

TEST_CASE("unweighted linear fit on the unit square corners") {
    Eigen::MatrixXd corners(4, 2);
    corners << 0, 0, 1, 0, 0, 1, 1, 1;
    Eigen::VectorXd targets(4);
    targets << 0, 0, 0, 1;
    const FitResult fit = solve_unweighted_linear(corners, targets);
    CHECK(fit.residuals[0] == doctest::Approx(0.25));
    CHECK(fit.residuals[1] == doctest::Approx(-0.25));
    CHECK(fit.residuals[2] == doctest::Approx(-0.25));
    CHECK(fit.residuals[3] == doctest::Approx(0.25));

    Eigen::VectorXd affine(4);
    for (int i = 0; i < 4; ++i) affine[i] = 2.0 - corners(i, 0) + 3.0 * corners(i, 1);
    CHECK(solve_unweighted_linear(corners, affine).residuals.cwiseAbs().maxCoeff() <
          1e-12);

    Eigen::MatrixXd collinear(3, 2);
    collinear << 0, 0, 0.5, 0.5, 1, 1;
    CHECK_THROWS_WITH(solve_unweighted_linear(collinear, Eigen::Vector3d(0, 1, 0)),
                      "degenerate indicator stencil");
}

TEST_CASE("SPD solve") {
    CHECK((solve_spd(Eigen::MatrixXd::Identity(3, 3), Eigen::Vector3d(1, 2, 3)) -
           Eigen::Vector3d(1, 2, 3))
              .norm() < 1e-14);

    Eigen::MatrixXd A(2, 2);
    A << 2, 1, 1, 2;
    const Eigen::VectorXd x = solve_spd(A, Eigen::Vector2d(3, 3));
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(1.0));

    Eigen::MatrixXd singular(2, 2);
    singular << 1, 1, 1, 1;
    CHECK_THROWS_WITH(solve_spd(singular, Eigen::Vector2d(1, 2)),
                      "kernel matrix not positive definite");
}
