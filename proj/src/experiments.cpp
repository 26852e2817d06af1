#include "pumls/experiments.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace pumls {

TestFunction parse_test_function(const std::string& tag) {
    if (tag == "franke") return TestFunction::Franke;
    if (tag == "franke-jump") return TestFunction::FrankeJump;
    if (tag == "trig-circle") return TestFunction::TrigCircle;
    if (tag == "exp-circle") return TestFunction::ExpCircle;
    if (tag == "mixed-jump") return TestFunction::MixedJump;
    throw std::invalid_argument("unknown test function: " + tag);
}

std::string test_function_tag(TestFunction f) {
    switch (f) {
        case TestFunction::Franke: return "franke";
        case TestFunction::FrankeJump: return "franke-jump";
        case TestFunction::TrigCircle: return "trig-circle";
        case TestFunction::ExpCircle: return "exp-circle";
        case TestFunction::MixedJump: return "mixed-jump";
    }
    throw std::logic_error("unknown test function");
}

Method parse_method(const std::string& token) {
    if (token == "pu") return Method::Pu;
    if (token == "ddpu") return Method::Ddpu;
    throw std::invalid_argument("unknown method: " + token);
}

Sampling parse_sampling(const std::string& token) {
    if (token == "grid") return Sampling::Grid;
    if (token == "halton") return Sampling::Halton;
    throw std::invalid_argument("unknown sampling: " + token);
}

namespace {

double franke(double x, double y) {
    const double a = 0.75 * std::exp(-(std::pow(9.0 * x - 2.0, 2) +
                                       std::pow(9.0 * y - 2.0, 2)) / 4.0);
    const double b = 0.75 * std::exp(-std::pow(9.0 * x + 1.0, 2) / 49.0 -
                                     (9.0 * y + 1.0) / 10.0);
    const double c = 0.5 * std::exp(-(std::pow(9.0 * x - 7.0, 2) +
                                      std::pow(9.0 * y - 3.0, 2)) / 4.0);
    const double d = 0.2 * std::exp(-std::pow(9.0 * x - 4.0, 2) -
                                    std::pow(9.0 * y - 7.0, 2));
    return a + b + c - d;
}

double circle_metric(double x, double y) {
    return std::pow(x - 0.5, 2) + std::pow(y - 0.5, 2);
}

}  // namespace

double eval_test_function(TestFunction f, double x, double y) {
    switch (f) {
        case TestFunction::Franke:
            return franke(x, y);
        case TestFunction::FrankeJump:
            return circle_metric(x, y) <= 0.25 * 0.25 ? franke(x, y) + 1.0
                                                      : franke(x, y);
        case TestFunction::TrigCircle:
            return circle_metric(x, y) >= 0.25 * 0.25 ? std::sin(x * y)
                                                      : std::cos(x * y);
        case TestFunction::ExpCircle:
            return circle_metric(x, y) >= 0.25 * 0.25
                       ? y * std::sin(x) + y * std::cos(x)
                       : std::exp(x * y) + 1.0;
        case TestFunction::MixedJump:
            return circle_metric(x, y) >= 0.1
                       ? -(x + y + 1.0) * std::cos(4.0 * x) +
                             std::sin(4.0 * (x + y))
                       : std::exp(-10.0 * circle_metric(x, y));
    }
    throw std::logic_error("unknown test function");
}

bool has_jump(TestFunction f) { return f != TestFunction::Franke; }

double jump_distance(TestFunction f, double x, double y) {
    if (!has_jump(f)) throw std::invalid_argument("function has no discontinuity");
    const double radius = f == TestFunction::MixedJump ? std::sqrt(0.1) : 0.25;
    return std::abs(std::sqrt(circle_metric(x, y)) - radius);
}

Metrics error_metrics(const Eigen::VectorXd& exact, const Eigen::VectorXd& approx) {
    if (exact.size() != approx.size() || exact.size() == 0)
        throw std::invalid_argument("error vectors must have equal positive length");
    const Eigen::VectorXd err = (exact - approx).cwiseAbs();
    Metrics m;
    m.mae = err.maxCoeff();
    m.rmse = std::sqrt(err.squaredNorm() / static_cast<double>(err.size()));
    return m;
}

std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors,
                                                     const std::vector<double>& h) {
    if (errors.size() != h.size() || errors.size() < 2)
        throw std::invalid_argument("need at least two levels");
    std::vector<std::optional<double>> rates(errors.size());
    for (std::size_t l = 1; l < errors.size(); ++l) {
        if (!(h[l] < h[l - 1]))
            throw std::invalid_argument("non-decreasing h");
        if (errors[l] > 0.0 && errors[l - 1] > 0.0)
            rates[l] = std::log(errors[l - 1] / errors[l]) / std::log(h[l - 1] / h[l]);
    }
    return rates;
}

Eigen::MatrixXd evaluation_grid(int resolution) {
    if (resolution < 2) throw std::invalid_argument("evaluation resolution too small");
    Eigen::MatrixXd grid(static_cast<Eigen::Index>(resolution) * resolution, 2);
    Eigen::Index row = 0;
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j, ++row) {
            grid(row, 0) = static_cast<double>(i) / (resolution - 1);
            grid(row, 1) = static_cast<double>(j) / (resolution - 1);
        }
    return grid;
}

double nominal_grid_fill_distance(int level) {
    return std::pow(2.0, -level) * std::sqrt(2.0) / 2.0;
}

PointSet sample_function(TestFunction f, Sampling sampling, int level) {
    const Eigen::Index side = (Eigen::Index{1} << level) + 1;
    PointSet points = sampling == Sampling::Grid
                          ? uniform_grid(level, 2)
                          : halton_points(side * side, 2);
    Eigen::VectorXd values(points.size());
    for (Eigen::Index i = 0; i < points.size(); ++i)
        values[i] = eval_test_function(f, points.nodes()(i, 0), points.nodes()(i, 1));
    return points.with_values(std::move(values));
}

namespace {

PuEvaluator make_evaluator(const ExperimentConfig& config, const PointSet& data,
                           const DomainBox& box) {
    Covering cov = build_covering(data, box);
    require_filled(cov, config.degree);
    PuConfig pu = PuConfig::defaults(config.degree, config.kernel, cov);
    if (config.shape_override) pu.shape = *config.shape_override;
    return PuEvaluator(std::move(cov), pu, data);
}

Eigen::VectorXd evaluate_with_method(const ExperimentConfig& config,
                                     const PuEvaluator& evaluator,
                                     const PointSet& data,
                                     const Eigen::MatrixXd& grid) {
    if (config.method == Method::Pu) return evaluator.evaluate_field(grid);
    const SmoothnessIndicators ind = compute_indicators(evaluator.covering(), data);
    return evaluator.evaluate_field_nonlinear(grid, ind.values,
                                              config.nonlinear.epsilon,
                                              config.nonlinear.t);
}

}  // namespace

ConvergenceReport run_convergence(const ExperimentConfig& config,
                                  const std::vector<int>& levels,
                                  TestFunction function) {
    if (levels.empty()) throw std::invalid_argument("no refinement levels given");
    const DomainBox box = DomainBox::unit(2);
    const Eigen::MatrixXd grid = evaluation_grid(config.eval_resolution);
    Eigen::VectorXd exact(grid.rows());
    for (Eigen::Index i = 0; i < grid.rows(); ++i)
        exact[i] = eval_test_function(function, grid(i, 0), grid(i, 1));

    ConvergenceReport report;
    for (int level : levels) {
        if (!report.levels.empty() && level <= report.levels.back())
            throw std::invalid_argument("non-decreasing h");
        const PointSet data = sample_function(function, config.sampling, level);
        double h;
        if (config.sampling == Sampling::Grid)
            h = nominal_grid_fill_distance(level);
        else
            h = fill_distance(data, box);
        try {
            const PuEvaluator evaluator = make_evaluator(config, data, box);
            const Eigen::VectorXd approx =
                evaluate_with_method(config, evaluator, data, grid);
            const Metrics m = error_metrics(exact, approx);
            report.levels.push_back(level);
            report.node_counts.push_back(data.size());
            report.h.push_back(h);
            report.mae.push_back(m.mae);
            report.rmse.push_back(m.rmse);
        } catch (const std::exception& e) {
            throw std::runtime_error("level " + std::to_string(level) + ": " + e.what());
        }
    }
    report.rate_inf.assign(report.levels.size(), std::nullopt);
    report.rate_2.assign(report.levels.size(), std::nullopt);
    if (report.levels.size() >= 2) {
        report.rate_inf = convergence_rates(report.mae, report.h);
        report.rate_2 = convergence_rates(report.rmse, report.h);
    }
    return report;
}

FieldResult run_approximation(const ExperimentConfig& config, TestFunction function,
                              int level) {
    const DomainBox box = DomainBox::unit(2);
    const PointSet data = sample_function(function, config.sampling, level);
    const PuEvaluator evaluator = make_evaluator(config, data, box);

    FieldResult field;
    field.points = evaluation_grid(config.eval_resolution);
    field.exact.resize(field.points.rows());
    for (Eigen::Index i = 0; i < field.points.rows(); ++i)
        field.exact[i] =
            eval_test_function(function, field.points(i, 0), field.points(i, 1));
    field.approx = evaluate_with_method(config, evaluator, data, field.points);

    // Over/undershoot measure excursions of the approximant beyond the range
    // of the sampled data.
    field.overshoot = std::max(0.0, field.approx.maxCoeff() - data.values().maxCoeff());
    field.undershoot = std::max(0.0, data.values().minCoeff() - field.approx.minCoeff());

    if (has_jump(function)) {
        const double mask = 3.0 * nominal_grid_fill_distance(level);
        double far_mae = 0.0;
        for (Eigen::Index i = 0; i < field.points.rows(); ++i)
            if (jump_distance(function, field.points(i, 0), field.points(i, 1)) > mask)
                far_mae = std::max(far_mae,
                                   std::abs(field.exact[i] - field.approx[i]));
        field.far_field_mae = far_mae;
    } else {
        field.far_field_mae = error_metrics(field.exact, field.approx).mae;
    }
    return field;
}

void write_convergence_csv(const ConvergenceReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.precision(10);
    out << "level,N,h,mae,rate_inf,rmse,rate_2\n";
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
        out << report.levels[i] << "," << report.node_counts[i] << ","
            << report.h[i] << "," << report.mae[i] << ",";
        if (report.rate_inf[i]) out << *report.rate_inf[i];
        out << "," << report.rmse[i] << ",";
        if (report.rate_2[i]) out << *report.rate_2[i];
        out << "\n";
    }
}

void write_field_csv(const FieldResult& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.precision(10);
    out << "x,y,exact,approx,abs_error\n";
    for (Eigen::Index i = 0; i < field.points.rows(); ++i)
        out << field.points(i, 0) << "," << field.points(i, 1) << ","
            << field.exact[i] << "," << field.approx[i] << ","
            << std::abs(field.exact[i] - field.approx[i]) << "\n";
}

}  // namespace pumls
