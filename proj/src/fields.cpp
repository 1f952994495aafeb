#include "gridnls/fields.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridnls::fields {

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

// Signed arclength of a node on the central line of `axis`, or NaN if the
// node is not on that line.
double central_line_arclength(const Mesh& mesh, int axis, std::size_t node) {
    const auto c = mesh.node_coord(node);
    for (int a = 0; a < mesh.grid().spec.dimension; ++a)
        if (a != axis && c[static_cast<std::size_t>(a)] != 0.0)
            return std::numeric_limits<double>::quiet_NaN();
    return c[static_cast<std::size_t>(axis)];
}

}  // namespace

GraphFunction random_zero_boundary(std::shared_ptr<const Mesh> mesh, std::mt19937_64& rng) {
    GraphFunction f(std::move(mesh));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& x : f.values()) x = u(rng);
    f.clamp_boundary();
    return f;
}

GraphFunction gaussian_bump(std::shared_ptr<const Mesh> mesh, const std::array<double, 3>& center,
                            double width, bool zero_boundary) {
    if (!(width > 0.0)) throw std::invalid_argument("gaussian width must be positive");
    GraphFunction f = sample(std::move(mesh), [&](const std::array<double, 3>& x) {
        double r2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            const double d = x[static_cast<std::size_t>(a)] - center[static_cast<std::size_t>(a)];
            r2 += d * d;
        }
        return std::exp(-r2 / (width * width));
    });
    if (zero_boundary) f.clamp_boundary();
    return f;
}

GraphFunction line_concentration(std::shared_ptr<const Mesh> mesh, int axis, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (axis < 0 || axis >= mesh->grid().spec.dimension)
        throw std::out_of_range("axis out of range");
    GraphFunction f(std::move(mesh));
    const Mesh& m = f.mesh();
    for (std::size_t q = 0; q < m.node_count(); ++q) {
        const double s = central_line_arclength(m, axis, q);
        if (std::isnan(s)) continue;
        f[q] = std::sqrt(lambda) * sech(lambda * s);
    }
    return f;
}

GraphFunction line_soliton(std::shared_ptr<const Mesh> mesh, int axis, double kappa, double s0,
                           double p, bool zero_boundary) {
    if (!(kappa > 0.0) || !(p > 2.0)) throw std::invalid_argument("line_soliton requires kappa > 0, p > 2");
    GraphFunction f(std::move(mesh));
    const Mesh& m = f.mesh();
    const double expo = 2.0 / (p - 2.0);
    for (std::size_t q = 0; q < m.node_count(); ++q) {
        const double s = central_line_arclength(m, axis, q);
        if (std::isnan(s)) continue;
        f[q] = std::pow(sech(kappa * (s - s0)), expo);
    }
    if (zero_boundary) f.clamp_boundary();
    return f;
}

GraphFunction radial_bump(std::shared_ptr<const Mesh> mesh, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    return sample(std::move(mesh), [&](const std::array<double, 3>& x) {
        double r = 0.0;
        for (double c : x) r = std::max(r, std::abs(c));
        const double t = r / sigma;
        if (t >= 1.0) return 0.0;
        const double c = std::cos(0.5 * M_PI * t);
        return c * c;
    });
}

GraphFunction tensor_bump(std::shared_ptr<const Mesh> mesh, const std::array<double, 3>& center,
                          const std::array<double, 3>& kappa, bool zero_boundary) {
    const int d = mesh->grid().spec.dimension;
    GraphFunction f = sample(std::move(mesh), [&](const std::array<double, 3>& x) {
        double v = 1.0;
        for (int a = 0; a < d; ++a)
            v *= sech(kappa[static_cast<std::size_t>(a)] *
                      (x[static_cast<std::size_t>(a)] - center[static_cast<std::size_t>(a)]));
        return v;
    });
    if (zero_boundary) f.clamp_boundary();
    return f;
}

GraphFunction tent_on_edge(std::shared_ptr<const Mesh> mesh, int edge, double peak) {
    if (edge < 0 || edge >= mesh->grid().edge_count()) throw std::out_of_range("edge out of range");
    const int n = mesh->samples_per_edge();
    if (n % 2 != 0) throw std::invalid_argument("tent_on_edge requires an even samples_per_edge");
    GraphFunction f(mesh);
    for (int j = 1; j < n; ++j) {
        const double t = static_cast<double>(j) / n;
        f[mesh->edge_node(edge, j)] = peak * (1.0 - std::abs(2.0 * t - 1.0));
    }
    return f;
}

}  // namespace gridnls::fields
