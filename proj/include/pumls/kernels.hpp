#pragma once

#include <Eigen/Core>
#include <string>

namespace pumls {

enum class Kernel {
    Gaussian,
    InverseMultiquadric,
    Matern0,
    Matern2,
    Matern4,
    Wendland0,
    Wendland2,
    Wendland4,
};

// phi(r) in normalized radius. Wendland kernels vanish for r >= 1.
double evaluate(Kernel kernel, double r);

// Value at the origin (the maximum); 3 for Matern4 and Wendland4, 1 otherwise.
double peak_value(Kernel kernel);

bool compactly_supported(Kernel kernel);

// Order of continuity; -1 stands for C^infinity.
int smoothness_order(Kernel kernel);

// Radius beyond which phi drops below `truncation`. Compact kernels return 1.
double effective_support_radius(Kernel kernel, double truncation);

Kernel parse_kernel(const std::string& token);  // g | imq | m0 | m2 | m4 | w0 | w2 | w4
std::string kernel_token(Kernel kernel);

// Radial weight w(x; c) = phi(shape * ||x - c||).
struct ScaledWeight {
    Kernel kernel;
    double shape;  // inverse length

    ScaledWeight(Kernel k, double gamma);

    double operator()(double distance) const { return evaluate(kernel, shape * distance); }
    double at(const Eigen::RowVectorXd& x, const Eigen::RowVectorXd& center) const {
        return (*this)((x - center).norm());
    }
};

}  // namespace pumls
