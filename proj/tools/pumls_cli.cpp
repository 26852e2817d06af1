#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pumls/ddpu.hpp"
#include "pumls/experiments.hpp"
#include "pumls/point_set.hpp"
#include "pumls/rbf.hpp"

namespace {

std::vector<int> parse_levels(const std::string& spec) {
    const auto colon = spec.find(':');
    std::vector<int> levels;
    if (colon == std::string::npos) {
        levels.push_back(std::stoi(spec));
        return levels;
    }
    const int first = std::stoi(spec.substr(0, colon));
    const int last = std::stoi(spec.substr(colon + 1));
    for (int l = first; l <= last; ++l) levels.push_back(l);
    return levels;
}

void print_report(const pumls::ConvergenceReport& report) {
    std::printf("%5s %8s %10s %12s %8s %12s %8s\n", "level", "N", "h", "mae",
                "r_inf", "rmse", "r_2");
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
        std::printf("%5d %8lld %10.4e %12.4e ", report.levels[i],
                    static_cast<long long>(report.node_counts[i]), report.h[i],
                    report.mae[i]);
        if (report.rate_inf[i])
            std::printf("%8.4f ", *report.rate_inf[i]);
        else
            std::printf("%8s ", "-");
        std::printf("%12.4e ", report.rmse[i]);
        if (report.rate_2[i])
            std::printf("%8.4f\n", *report.rate_2[i]);
        else
            std::printf("%8s\n", "-");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scattered-data approximation with blended local moving least squares"};
    app.require_subcommand(1);

    std::string method = "pu";
    std::string sampling = "grid";
    std::string kernel = "w2";
    std::string function = "franke";
    std::string levels_spec = "4:7";
    std::string out_path;
    int degree = 2;
    int level = 5;
    int eval_res = 120;
    double epsilon = 1e-6;
    double t = 2.0;
    double shape = 0.0;

    auto* conv = app.add_subcommand("convergence", "Refinement study with error rates");
    conv->add_option("--method", method)->check(CLI::IsMember({"pu", "ddpu"}));
    conv->add_option("--sampling", sampling)->check(CLI::IsMember({"grid", "halton"}));
    conv->add_option("--degree", degree);
    conv->add_option("--kernel", kernel);
    conv->add_option("--levels", levels_spec);
    conv->add_option("--epsilon", epsilon);
    conv->add_option("--t", t);
    conv->add_option("--eval-res", eval_res);
    conv->add_option("--shape", shape);
    conv->add_option("--out", out_path);

    auto* approx = app.add_subcommand("approximate", "Evaluate a field on the unit square");
    approx->add_option("--function", function);
    approx->add_option("--method", method)->check(CLI::IsMember({"pu", "ddpu"}));
    approx->add_option("--sampling", sampling)->check(CLI::IsMember({"grid", "halton"}));
    approx->add_option("--degree", degree);
    approx->add_option("--kernel", kernel);
    approx->add_option("--level", level);
    approx->add_option("--epsilon", epsilon);
    approx->add_option("--t", t);
    approx->add_option("--eval-res", eval_res);
    approx->add_option("--shape", shape);
    approx->add_option("--out", out_path);

    auto* ind = app.add_subcommand("indicators", "Dump per-subdomain smoothness indicators");
    ind->add_option("--function", function);
    ind->add_option("--sampling", sampling)->check(CLI::IsMember({"grid", "halton"}));
    ind->add_option("--level", level);
    ind->add_option("--out", out_path);

    long long halton_count = 100;
    int halton_dim = 2;
    bool header = false;
    auto* halton = app.add_subcommand("halton", "Emit Halton sequence points as CSV");
    halton->add_option("--count", halton_count)->required();
    halton->add_option("--dim", halton_dim);
    halton->add_flag("--header", header);
    halton->add_option("--out", out_path);

    std::string data_path, eval_path;
    auto* rbf = app.add_subcommand("rbf", "Global radial-kernel interpolation");
    rbf->add_option("--kernel", kernel);
    rbf->add_option("--shape", shape)->required();
    rbf->add_option("--data", data_path)->required();
    rbf->add_option("--eval", eval_path)->required();
    rbf->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (conv->parsed() || approx->parsed()) {
            pumls::ExperimentConfig config;
            config.method = pumls::parse_method(method);
            config.sampling = pumls::parse_sampling(sampling);
            config.degree = degree;
            config.kernel = pumls::parse_kernel(kernel);
            config.eval_resolution = eval_res;
            config.nonlinear.epsilon = epsilon;
            config.nonlinear.t = t;
            if (shape > 0.0) config.shape_override = shape;

            if (conv->parsed()) {
                const auto report =
                    pumls::run_convergence(config, parse_levels(levels_spec));
                print_report(report);
                if (!out_path.empty()) pumls::write_convergence_csv(report, out_path);
            } else {
                const auto field = pumls::run_approximation(
                    config, pumls::parse_test_function(function), level);
                std::printf("overshoot %.4e undershoot %.4e far_field_mae %.4e\n",
                            field.overshoot, field.undershoot, field.far_field_mae);
                if (!out_path.empty()) pumls::write_field_csv(field, out_path);
            }
        } else if (ind->parsed()) {
            const auto f = pumls::parse_test_function(function);
            const auto data =
                pumls::sample_function(f, pumls::parse_sampling(sampling), level);
            const auto box = pumls::DomainBox::unit(2);
            const auto cov = pumls::build_covering(data, box);
            const auto indicators = pumls::compute_indicators(cov, data);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw std::runtime_error("cannot open " + out_path);
                os = &file;
            }
            *os << "cx,cy,N_k,I_k\n";
            for (int k = 0; k < cov.count(); ++k)
                *os << cov.centers(k, 0) << "," << cov.centers(k, 1) << ","
                    << indicators.counts[static_cast<std::size_t>(k)] << ","
                    << indicators.values[k] << "\n";
        } else if (halton->parsed()) {
            const auto points = pumls::halton_points(halton_count, halton_dim);
            if (out_path.empty()) out_path = "halton.csv";
            pumls::write_points_csv(points, out_path, header);
        } else if (rbf->parsed()) {
            const auto data = pumls::read_points_csv(data_path, 2, true);
            const auto eval = pumls::read_points_csv(eval_path, 2, false);
            const pumls::ScaledWeight weight(pumls::parse_kernel(kernel), shape);
            const auto interp = pumls::fit_rbf(weight, data);
            std::ofstream out(out_path.empty() ? "rbf_field.csv" : out_path);
            if (!out) throw std::runtime_error("cannot open output file");
            out.precision(10);
            out << "x,y,value\n";
            for (Eigen::Index i = 0; i < eval.size(); ++i)
                out << eval.nodes()(i, 0) << "," << eval.nodes()(i, 1) << ","
                    << pumls::eval_rbf(interp, eval.node(i)) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
