#include "pumls/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "pumls/parallel.hpp"

namespace pumls {

DomainBox::DomainBox(Eigen::VectorXd lo, Eigen::VectorXd up)
    : lower(std::move(lo)), upper(std::move(up)) {
    if (lower.size() != upper.size() || lower.size() == 0)
        throw std::invalid_argument("box bounds must have equal positive dimension");
    for (Eigen::Index d = 0; d < lower.size(); ++d)
        if (!(upper[d] > lower[d]))
            throw std::invalid_argument("box upper bound must exceed lower bound");
}

DomainBox DomainBox::unit(int dim) {
    return DomainBox(Eigen::VectorXd::Zero(dim), Eigen::VectorXd::Ones(dim));
}

namespace {

void check_distinct(const Eigen::MatrixXd& nodes) {
    const Eigen::Index n = nodes.rows();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        for (Eigen::Index d = 0; d < nodes.cols(); ++d) {
            if (nodes(a, d) < nodes(b, d)) return true;
            if (nodes(a, d) > nodes(b, d)) return false;
        }
        return false;
    });
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        if (nodes.row(order[i]) == nodes.row(order[i + 1]))
            throw std::invalid_argument("duplicate node in point set");
}

}  // namespace

PointSet::PointSet(int dim, Eigen::MatrixXd nodes)
    : dim_(dim), nodes_(std::move(nodes)) {
    if (dim_ < 1) throw std::invalid_argument("dimension must be positive");
    if (nodes_.cols() != dim_)
        throw std::invalid_argument("node coordinate count does not match dimension");
    if (!nodes_.allFinite())
        throw std::invalid_argument("node coordinates must be finite");
    check_distinct(nodes_);
}

PointSet::PointSet(int dim, Eigen::MatrixXd nodes, Eigen::VectorXd values)
    : PointSet(dim, std::move(nodes)) {
    if (values.size() != nodes_.rows())
        throw std::invalid_argument("value count does not match node count");
    values_ = std::move(values);
}

const Eigen::VectorXd& PointSet::values() const {
    if (!values_) throw std::logic_error("point set carries no values");
    return *values_;
}

PointSet PointSet::with_values(Eigen::VectorXd values) const {
    return PointSet(dim_, nodes_, std::move(values));
}

PointSet uniform_grid(int level, int dim) {
    if (level < 1) throw std::invalid_argument("grid level must be >= 1");
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    const Eigen::Index side = (Eigen::Index{1} << level) + 1;
    Eigen::Index total = 1;
    for (int d = 0; d < dim; ++d) total *= side;
    const double denom = static_cast<double>(side - 1);

    Eigen::MatrixXd nodes(total, dim);
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(dim), 0);
    for (Eigen::Index row = 0; row < total; ++row) {
        for (int d = 0; d < dim; ++d)
            nodes(row, d) = static_cast<double>(idx[static_cast<std::size_t>(d)]) / denom;
        for (int d = dim - 1; d >= 0; --d) {
            if (++idx[static_cast<std::size_t>(d)] < side) break;
            idx[static_cast<std::size_t>(d)] = 0;
        }
    }
    return PointSet(dim, std::move(nodes));
}

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                           31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

double radical_inverse(Eigen::Index i, int base) {
    double inv = 1.0 / base;
    double result = 0.0;
    double f = inv;
    while (i > 0) {
        result += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return result;
}

}  // namespace

PointSet halton_points(Eigen::Index count, int dim) {
    if (count < 1) throw std::invalid_argument("point count must be positive");
    if (dim < 1 || dim > static_cast<int>(std::size(kPrimes)))
        throw std::invalid_argument("dimension outside supported prime-base range");
    Eigen::MatrixXd nodes(count, dim);
    for (Eigen::Index i = 0; i < count; ++i)
        for (int d = 0; d < dim; ++d)
            nodes(i, d) = radical_inverse(i + 1, kPrimes[d]);
    return PointSet(dim, std::move(nodes));
}

double fill_distance(const PointSet& points, const DomainBox& box,
                     int probe_resolution) {
    if (points.size() == 0) throw std::invalid_argument("empty node set");
    if (probe_resolution < 2)
        throw std::invalid_argument("probe resolution must be >= 2");
    const int dim = points.dim();
    if (box.dim() != dim) throw std::invalid_argument("box dimension mismatch");

    Eigen::Index probes = 1;
    for (int d = 0; d < dim; ++d) probes *= probe_resolution;

    const Eigen::MatrixXd& nodes = points.nodes();
    Eigen::VectorXd cell(dim);
    for (int d = 0; d < dim; ++d)
        cell[d] = (box.upper[d] - box.lower[d]) / (probe_resolution - 1);
    const double half_diag = 0.5 * cell.norm();

    const auto probe_coords = [&](Eigen::Index p, Eigen::VectorXd& out) {
        for (int d = dim - 1; d >= 0; --d) {
            out[d] = box.lower[d] + cell[d] * static_cast<double>(p % probe_resolution);
            p /= probe_resolution;
        }
    };

    std::vector<double> dist2(static_cast<std::size_t>(probes));
    parallel_for(probes, [&](std::size_t, Eigen::Index begin, Eigen::Index end) {
        Eigen::VectorXd probe(dim);
        for (Eigen::Index p = begin; p < end; ++p) {
            probe_coords(p, probe);
            dist2[static_cast<std::size_t>(p)] =
                (nodes.rowwise() - probe.transpose()).rowwise().squaredNorm().minCoeff();
        }
    });

    // The sup can fall between lattice probes, but every domain point lies
    // within half a cell diagonal of some probe, so only cells whose probe
    // comes that close to the running best can still improve it. Visit them
    // best-first with a local subgrid.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(probes));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return dist2[static_cast<std::size_t>(a)] > dist2[static_cast<std::size_t>(b)];
    });

    constexpr int kRefine = 16;
    Eigen::Index fine_probes = 1;
    for (int d = 0; d < dim; ++d) fine_probes *= 2 * kRefine + 1;
    double best = dist2[static_cast<std::size_t>(order.front())];
    Eigen::VectorXd probe(dim), fine(dim);
    for (const Eigen::Index p : order) {
        const double reach = std::sqrt(dist2[static_cast<std::size_t>(p)]) + half_diag;
        if (reach * reach <= best) break;
        probe_coords(p, probe);
        for (Eigen::Index q = 0; q < fine_probes; ++q) {
            Eigen::Index rem = q;
            for (int d = dim - 1; d >= 0; --d) {
                const auto k = static_cast<double>(rem % (2 * kRefine + 1) - kRefine);
                rem /= 2 * kRefine + 1;
                fine[d] = std::clamp(probe[d] + cell[d] * k / kRefine, box.lower[d],
                                     box.upper[d]);
            }
            best = std::max(best, (nodes.rowwise() - fine.transpose())
                                      .rowwise()
                                      .squaredNorm()
                                      .minCoeff());
        }
    }
    return std::sqrt(best);
}

double separation_distance(const PointSet& points) {
    const Eigen::Index n = points.size();
    if (n < 2) throw std::invalid_argument("undefined separation");
    const Eigen::MatrixXd& nodes = points.nodes();
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d2 = (nodes.row(i) - nodes.row(j)).squaredNorm();
            best = std::min(best, d2);
        }
    }
    return 0.5 * std::sqrt(best);
}

double quasi_uniformity_ratio(const PointSet& points, const DomainBox& box,
                              int probe_resolution) {
    return fill_distance(points, box, probe_resolution) / separation_distance(points);
}

void write_points_csv(const PointSet& points, const std::string& path, bool header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.precision(17);
    if (header) {
        for (int d = 0; d < points.dim(); ++d) {
            if (d) out << ",";
            out << "x_" << (d + 1);
        }
        if (points.has_values()) out << ",f";
        out << "\n";
    }
    for (Eigen::Index i = 0; i < points.size(); ++i) {
        for (int d = 0; d < points.dim(); ++d) {
            if (d) out << ",";
            out << points.nodes()(i, d);
        }
        if (points.has_values()) out << "," << points.values()[i];
        out << "\n";
    }
}

PointSet read_points_csv(const std::string& path, int dim, bool with_values) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<double> coords;
    std::vector<double> values;
    std::string line;
    const int fields = dim + (with_values ? 1 : 0);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.find_first_not_of("0123456789+-.eE, \t\r") != std::string::npos)
            continue;  // header line
        std::istringstream row(line);
        std::string cell;
        int got = 0;
        while (std::getline(row, cell, ',')) {
            const double v = std::stod(cell);
            if (got < dim)
                coords.push_back(v);
            else
                values.push_back(v);
            ++got;
        }
        if (got != fields)
            throw std::runtime_error("malformed CSV row in " + path);
    }
    const Eigen::Index n = static_cast<Eigen::Index>(coords.size()) / dim;
    Eigen::MatrixXd nodes(n, dim);
    for (Eigen::Index i = 0; i < n; ++i)
        for (int d = 0; d < dim; ++d)
            nodes(i, d) = coords[static_cast<std::size_t>(i * dim + d)];
    if (with_values) {
        Eigen::VectorXd f =
            Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
        return PointSet(dim, std::move(nodes), std::move(f));
    }
    return PointSet(dim, std::move(nodes));
}

}  // namespace pumls
