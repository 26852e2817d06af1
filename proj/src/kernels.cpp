#include "pumls/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace pumls {

double evaluate(Kernel kernel, double r) {
    if (r < 0.0) throw std::invalid_argument("negative radius");
    switch (kernel) {
        case Kernel::Gaussian:
            return std::exp(-r * r);
        case Kernel::InverseMultiquadric:
            return 1.0 / std::sqrt(1.0 + r * r);
        case Kernel::Matern0:
            return std::exp(-r);
        case Kernel::Matern2:
            return std::exp(-r) * (1.0 + r);
        case Kernel::Matern4:
            return std::exp(-r) * (3.0 + 3.0 * r + r * r);
        case Kernel::Wendland0: {
            if (r >= 1.0) return 0.0;
            const double s = 1.0 - r;
            return s * s;
        }
        case Kernel::Wendland2: {
            if (r >= 1.0) return 0.0;
            const double s = 1.0 - r;
            const double s2 = s * s;
            return s2 * s2 * (4.0 * r + 1.0);
        }
        case Kernel::Wendland4: {
            if (r >= 1.0) return 0.0;
            const double s = 1.0 - r;
            const double s3 = s * s * s;
            return s3 * s3 * (35.0 * r * r + 18.0 * r + 3.0);
        }
    }
    throw std::logic_error("unknown kernel");
}

double peak_value(Kernel kernel) {
    return (kernel == Kernel::Matern4 || kernel == Kernel::Wendland4) ? 3.0 : 1.0;
}

bool compactly_supported(Kernel kernel) {
    return kernel == Kernel::Wendland0 || kernel == Kernel::Wendland2 ||
           kernel == Kernel::Wendland4;
}

int smoothness_order(Kernel kernel) {
    switch (kernel) {
        case Kernel::Gaussian:
        case Kernel::InverseMultiquadric:
            return -1;
        case Kernel::Matern0:
        case Kernel::Wendland0:
            return 0;
        case Kernel::Matern2:
        case Kernel::Wendland2:
            return 2;
        case Kernel::Matern4:
        case Kernel::Wendland4:
            return 4;
    }
    throw std::logic_error("unknown kernel");
}

double effective_support_radius(Kernel kernel, double truncation) {
    if (!(truncation > 0.0) || truncation >= peak_value(kernel))
        throw std::invalid_argument("truncation above peak");
    switch (kernel) {
        case Kernel::Wendland0:
        case Kernel::Wendland2:
        case Kernel::Wendland4:
            return 1.0;
        case Kernel::Gaussian:
            return std::sqrt(-std::log(truncation));
        case Kernel::InverseMultiquadric:
            return std::sqrt(1.0 / (truncation * truncation) - 1.0);
        case Kernel::Matern0:
            return -std::log(truncation);
        case Kernel::Matern2:
        case Kernel::Matern4: {
            // Monotone decreasing, so bisect the unique crossing.
            double lo = 0.0;
            double hi = 1.0;
            while (evaluate(kernel, hi) > truncation) hi *= 2.0;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (evaluate(kernel, mid) > truncation)
                    lo = mid;
                else
                    hi = mid;
            }
            return 0.5 * (lo + hi);
        }
    }
    throw std::logic_error("unknown kernel");
}

Kernel parse_kernel(const std::string& token) {
    if (token == "g") return Kernel::Gaussian;
    if (token == "imq") return Kernel::InverseMultiquadric;
    if (token == "m0") return Kernel::Matern0;
    if (token == "m2") return Kernel::Matern2;
    if (token == "m4") return Kernel::Matern4;
    if (token == "w0") return Kernel::Wendland0;
    if (token == "w2") return Kernel::Wendland2;
    if (token == "w4") return Kernel::Wendland4;
    throw std::invalid_argument("unknown kernel token: " + token);
}

std::string kernel_token(Kernel kernel) {
    switch (kernel) {
        case Kernel::Gaussian: return "g";
        case Kernel::InverseMultiquadric: return "imq";
        case Kernel::Matern0: return "m0";
        case Kernel::Matern2: return "m2";
        case Kernel::Matern4: return "m4";
        case Kernel::Wendland0: return "w0";
        case Kernel::Wendland2: return "w2";
        case Kernel::Wendland4: return "w4";
    }
    throw std::logic_error("unknown kernel");
}

ScaledWeight::ScaledWeight(Kernel k, double gamma) : kernel(k), shape(gamma) {
    if (!(shape > 0.0)) throw std::invalid_argument("shape parameter must be positive");
}

}  // namespace pumls
