#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "pumls/ddpu.hpp"
#include "pumls/kernels.hpp"
#include "pumls/partition.hpp"
#include "pumls/point_set.hpp"

namespace pumls {

enum class TestFunction { Franke, FrankeJump, TrigCircle, ExpCircle, MixedJump };
enum class Method { Pu, Ddpu };
enum class Sampling { Grid, Halton };

TestFunction parse_test_function(const std::string& tag);
std::string test_function_tag(TestFunction f);
Method parse_method(const std::string& token);
Sampling parse_sampling(const std::string& token);

double eval_test_function(TestFunction f, double x, double y);

bool has_jump(TestFunction f);
// Distance from (x, y) to the discontinuity curve (circle) of a jump function.
double jump_distance(TestFunction f, double x, double y);

struct Metrics {
    double mae = 0.0;
    double rmse = 0.0;
};

Metrics error_metrics(const Eigen::VectorXd& exact, const Eigen::VectorXd& approx);

// rate_l = log(E_{l-1}/E_l) / log(h_{l-1}/h_l); absent where undefined.
std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors,
                                                     const std::vector<double>& h);

struct ConvergenceReport {
    std::vector<int> levels;
    std::vector<Eigen::Index> node_counts;
    std::vector<double> h;
    std::vector<double> mae;
    std::vector<double> rmse;
    std::vector<std::optional<double>> rate_inf;
    std::vector<std::optional<double>> rate_2;
};

struct ExperimentConfig {
    Method method = Method::Pu;
    Sampling sampling = Sampling::Grid;
    int degree = 2;
    Kernel kernel = Kernel::Wendland2;
    int eval_resolution = 120;
    NonlinearConfig nonlinear;
    std::optional<double> shape_override;
};

ConvergenceReport run_convergence(const ExperimentConfig& config,
                                  const std::vector<int>& levels,
                                  TestFunction function = TestFunction::Franke);

struct FieldResult {
    Eigen::MatrixXd points;   // eval grid, row-major over the square
    Eigen::VectorXd exact;
    Eigen::VectorXd approx;
    double overshoot = 0.0;   // max(approx) - max(exact) clipped at zero
    double undershoot = 0.0;  // min(exact) - min(approx) clipped at zero
    double far_field_mae = 0.0;  // MAE beyond 3h from the jump curve
};

FieldResult run_approximation(const ExperimentConfig& config, TestFunction function,
                              int level);

// Uniform (resolution x resolution) evaluation grid over the unit square.
Eigen::MatrixXd evaluation_grid(int resolution);

// Nominal fill distance of the level-l uniform grid: half cell diagonal.
double nominal_grid_fill_distance(int level);

PointSet sample_function(TestFunction f, Sampling sampling, int level);

void write_convergence_csv(const ConvergenceReport& report, const std::string& path);
void write_field_csv(const FieldResult& field, const std::string& path);

}  // namespace pumls
