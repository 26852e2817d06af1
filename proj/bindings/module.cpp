#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pumls/ddpu.hpp"
#include "pumls/experiments.hpp"
#include "pumls/kernels.hpp"
#include "pumls/partition.hpp"
#include "pumls/point_set.hpp"
#include "pumls/rbf.hpp"

namespace py = pybind11;
using namespace pumls;

PYBIND11_MODULE(_pumls, m) {
    m.doc() = "Scattered-data approximation: moving least squares with "
              "partition-of-unity and data-dependent blending";

    py::class_<DomainBox>(m, "DomainBox")
        .def(py::init<Eigen::VectorXd, Eigen::VectorXd>())
        .def_static("unit", &DomainBox::unit)
        .def_readonly("lower", &DomainBox::lower)
        .def_readonly("upper", &DomainBox::upper);

    py::class_<PointSet>(m, "PointSet")
        .def(py::init<int, Eigen::MatrixXd>())
        .def(py::init<int, Eigen::MatrixXd, Eigen::VectorXd>())
        .def_property_readonly("dim", &PointSet::dim)
        .def("__len__", &PointSet::size)
        .def_property_readonly("nodes", &PointSet::nodes)
        .def_property_readonly("has_values", &PointSet::has_values)
        .def_property_readonly("values",
                               [](const PointSet& p) { return p.values(); })
        .def("with_values", &PointSet::with_values);

    m.def("uniform_grid", &uniform_grid, py::arg("level"), py::arg("dim") = 2);
    m.def("halton_points", &halton_points, py::arg("count"), py::arg("dim") = 2);
    m.def("fill_distance", &fill_distance, py::arg("points"), py::arg("box"),
          py::arg("probe_resolution") = 200);
    m.def("separation_distance", &separation_distance);
    m.def("quasi_uniformity_ratio", &quasi_uniformity_ratio, py::arg("points"),
          py::arg("box"), py::arg("probe_resolution") = 200);

    m.def("kernel_eval",
          [](const std::string& token, double r) {
              return evaluate(parse_kernel(token), r);
          },
          py::arg("kernel"), py::arg("r"));
    m.def("effective_support_radius",
          [](const std::string& token, double truncation) {
              return effective_support_radius(parse_kernel(token), truncation);
          },
          py::arg("kernel"), py::arg("truncation") = 1e-10);

    m.def("weno_optimal_weights", &weno_optimal_weights, py::arg("r"));

    m.def("rbf_interpolate",
          [](const std::string& kernel, double shape, const PointSet& data,
             const Eigen::MatrixXd& eval_points) {
              const auto interp =
                  fit_rbf(ScaledWeight(parse_kernel(kernel), shape), data);
              Eigen::VectorXd out(eval_points.rows());
              for (Eigen::Index i = 0; i < eval_points.rows(); ++i)
                  out[i] = eval_rbf(interp, eval_points.row(i));
              return out;
          },
          py::arg("kernel"), py::arg("shape"), py::arg("data"),
          py::arg("eval_points"));

    m.def("approximate",
          [](const PointSet& data, const Eigen::MatrixXd& eval_points,
             const std::string& method, int degree, const std::string& kernel,
             double epsilon, double t) {
              const DomainBox box = DomainBox::unit(data.dim());
              Covering cov = build_covering(data, box);
              require_filled(cov, degree);
              const PuConfig config =
                  PuConfig::defaults(degree, parse_kernel(kernel), cov);
              const PuEvaluator evaluator(std::move(cov), config, data);
              if (parse_method(method) == Method::Pu)
                  return evaluator.evaluate_field(eval_points);
              const SmoothnessIndicators ind =
                  compute_indicators(evaluator.covering(), data);
              return evaluator.evaluate_field_nonlinear(eval_points, ind.values,
                                                        epsilon, t);
          },
          py::arg("data"), py::arg("eval_points"), py::arg("method") = "ddpu",
          py::arg("degree") = 2, py::arg("kernel") = "w2",
          py::arg("epsilon") = 1e-6, py::arg("t") = 2.0,
          "Blend local moving-least-squares fits over a ball covering of the "
          "unit square; method 'pu' uses Shepard weights, 'ddpu' the "
          "indicator-penalized weights.");

    m.def("test_function",
          [](const std::string& tag, double x, double y) {
              return eval_test_function(parse_test_function(tag), x, y);
          },
          py::arg("tag"), py::arg("x"), py::arg("y"));

    m.def("run_convergence",
          [](const std::string& method, const std::string& sampling, int degree,
             const std::string& kernel, const std::vector<int>& levels,
             int eval_resolution) {
              ExperimentConfig config;
              config.method = parse_method(method);
              config.sampling = parse_sampling(sampling);
              config.degree = degree;
              config.kernel = parse_kernel(kernel);
              config.eval_resolution = eval_resolution;
              const auto report = run_convergence(config, levels);
              py::dict out;
              out["levels"] = report.levels;
              out["h"] = report.h;
              out["mae"] = report.mae;
              out["rmse"] = report.rmse;
              std::vector<py::object> ri, r2;
              for (std::size_t i = 0; i < report.levels.size(); ++i) {
                  ri.push_back(report.rate_inf[i] ? py::cast(*report.rate_inf[i])
                                                  : py::none());
                  r2.push_back(report.rate_2[i] ? py::cast(*report.rate_2[i])
                                                : py::none());
              }
              out["rate_inf"] = ri;
              out["rate_2"] = r2;
              return out;
          },
          py::arg("method") = "pu", py::arg("sampling") = "grid",
          py::arg("degree") = 2, py::arg("kernel") = "w2",
          py::arg("levels") = std::vector<int>{4, 5},
          py::arg("eval_resolution") = 120);
}
