#include "gridnls/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "gridnls/parallel.hpp"

namespace gridnls::kernels {

namespace {

inline double pow_abs(double x, double p) { return std::pow(std::abs(x), p); }

inline double antiderivative(double x, double q) {
    // F(x) = sign(x) |x|^q / q with q = p+1
    return std::copysign(std::pow(std::abs(x), q), x) / q;
}

inline double interval_value(const Mesh& mesh, const std::vector<double>& v, std::size_t idx,
                             double& a, double& b) {
    const auto [na, nb] = mesh.interval_nodes(idx);
    a = v[na];
    b = v[nb];
    return mesh.step();
}

}  // namespace

double interval_abs_pow(double a, double b, double h, double p) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    const double d = b - a;
    if (std::abs(d) <= 1e-4 * scale) {
        const double m = 0.5 * (a + b);
        return h / 6.0 * (pow_abs(a, p) + 4.0 * pow_abs(m, p) + pow_abs(b, p));
    }
    const double q = p + 1.0;
    return h * (antiderivative(b, q) - antiderivative(a, q)) / d;
}

double lp_pow(const Mesh& mesh, const std::vector<double>& v, double p) {
    const double h = mesh.step();
    return par::deterministic_sum(mesh.interval_count(), [&](std::size_t idx) {
        double a, b;
        interval_value(mesh, v, idx, a, b);
        return interval_abs_pow(a, b, h, p);
    });
}

double deriv_l2_sq(const Mesh& mesh, const std::vector<double>& v) {
    const double h = mesh.step();
    return par::deterministic_sum(mesh.interval_count(), [&](std::size_t idx) {
        double a, b;
        interval_value(mesh, v, idx, a, b);
        return (b - a) * (b - a) / h;
    });
}

double deriv_l1(const Mesh& mesh, const std::vector<double>& v) {
    return par::deterministic_sum(mesh.interval_count(), [&](std::size_t idx) {
        double a, b;
        interval_value(mesh, v, idx, a, b);
        return std::abs(b - a);
    });
}

double sup_abs(const std::vector<double>& v) {
    return par::deterministic_max(v.size(), [&](std::size_t i) { return std::abs(v[i]); });
}

double l2_inner(const Mesh& mesh, const std::vector<double>& x, const std::vector<double>& y) {
    const double h = mesh.step();
    return par::deterministic_sum(mesh.interval_count(), [&](std::size_t idx) {
        const auto [na, nb] = mesh.interval_nodes(idx);
        return h / 6.0 * (2.0 * x[na] * y[na] + 2.0 * x[nb] * y[nb] + x[na] * y[nb] + x[nb] * y[na]);
    });
}

double lumped_pot_pow(const Mesh& mesh, const std::vector<double>& v, double p) {
    const auto& w = mesh.lumped_weights();
    return par::deterministic_sum(v.size(), [&](std::size_t q) { return w[q] * pow_abs(v[q], p); });
}

void energy_gradient_into(const Mesh& mesh, const std::vector<double>& v, double p,
                          Boundary boundary, std::vector<double>& out) {
    const double h = mesh.step();
    const auto& off = mesh.neighbor_offsets();
    const auto& ids = mesh.neighbor_ids();
    const auto& w = mesh.lumped_weights();
    out.resize(v.size());
    const bool dirichlet = boundary == Boundary::dirichlet;
    par::parallel_for(v.size(), [&](std::size_t q) {
        if (dirichlet && mesh.is_boundary_vertex_node(q)) {
            out[q] = 0.0;
            return;
        }
        double kin = 0.0;
        for (std::size_t i = off[q]; i < off[q + 1]; ++i) kin += (v[q] - v[ids[i]]) / h;
        const double pot = w[q] * pow_abs(v[q], p - 2.0) * v[q];
        out[q] = kin - pot;
    });
}

namespace serial {

double lp_pow(const Mesh& mesh, const std::vector<double>& v, double p) {
    const double h = mesh.step();
    double acc = 0.0;
    for (std::size_t idx = 0; idx < mesh.interval_count(); ++idx) {
        const auto [na, nb] = mesh.interval_nodes(idx);
        acc += interval_abs_pow(v[na], v[nb], h, p);
    }
    return acc;
}

double deriv_l2_sq(const Mesh& mesh, const std::vector<double>& v) {
    const double h = mesh.step();
    double acc = 0.0;
    for (std::size_t idx = 0; idx < mesh.interval_count(); ++idx) {
        const auto [na, nb] = mesh.interval_nodes(idx);
        const double d = v[nb] - v[na];
        acc += d * d / h;
    }
    return acc;
}

double deriv_l1(const Mesh& mesh, const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t idx = 0; idx < mesh.interval_count(); ++idx) {
        const auto [na, nb] = mesh.interval_nodes(idx);
        acc += std::abs(v[nb] - v[na]);
    }
    return acc;
}

double sup_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double l2_inner(const Mesh& mesh, const std::vector<double>& x, const std::vector<double>& y) {
    const double h = mesh.step();
    double acc = 0.0;
    for (std::size_t idx = 0; idx < mesh.interval_count(); ++idx) {
        const auto [na, nb] = mesh.interval_nodes(idx);
        acc += h / 6.0 * (2.0 * x[na] * y[na] + 2.0 * x[nb] * y[nb] + x[na] * y[nb] + x[nb] * y[na]);
    }
    return acc;
}

double lumped_pot_pow(const Mesh& mesh, const std::vector<double>& v, double p) {
    const auto& w = mesh.lumped_weights();
    double acc = 0.0;
    for (std::size_t q = 0; q < v.size(); ++q) acc += w[q] * pow_abs(v[q], p);
    return acc;
}

void energy_gradient_into(const Mesh& mesh, const std::vector<double>& v, double p,
                          Boundary boundary, std::vector<double>& out) {
    const double h = mesh.step();
    const auto& off = mesh.neighbor_offsets();
    const auto& ids = mesh.neighbor_ids();
    const auto& w = mesh.lumped_weights();
    out.assign(v.size(), 0.0);
    for (std::size_t q = 0; q < v.size(); ++q) {
        if (boundary == Boundary::dirichlet && mesh.is_boundary_vertex_node(q)) continue;
        double kin = 0.0;
        for (std::size_t i = off[q]; i < off[q + 1]; ++i) kin += (v[q] - v[ids[i]]) / h;
        out[q] = kin - w[q] * pow_abs(v[q], p - 2.0) * v[q];
    }
}

}  // namespace serial

}  // namespace gridnls::kernels
