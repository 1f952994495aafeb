#include "gridnls/function_space.hpp"

#include <cmath>
#include <stdexcept>

#include "gridnls/kernels.hpp"

namespace gridnls {

bool GraphFunction::vanishes_on_boundary() const {
    for (int v : mesh_->grid().boundary_vertices)
        if (values_[static_cast<std::size_t>(v)] != 0.0) return false;
    return true;
}

void GraphFunction::clamp_boundary() {
    for (int v : mesh_->grid().boundary_vertices) values_[static_cast<std::size_t>(v)] = 0.0;
}

GraphFunction sample(std::shared_ptr<const Mesh> mesh, const PointwiseRule& rule) {
    GraphFunction f(std::move(mesh));
    auto& v = f.values();
    for (std::size_t q = 0; q < v.size(); ++q) {
        const double x = rule(f.mesh().node_coord(q));
        if (!std::isfinite(x)) throw std::domain_error("sample rule returned a non-finite value");
        v[q] = x;
    }
    return f;
}

double lp_norm_pow(const GraphFunction& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm requires p >= 1");
    return kernels::lp_pow(f.mesh(), f.values(), p);
}

double lp_norm(const GraphFunction& f, double p) {
    return std::pow(lp_norm_pow(f, p), 1.0 / p);
}

double sup_norm(const GraphFunction& f) { return kernels::sup_abs(f.values()); }

double derivative_l2_sq(const GraphFunction& f) { return kernels::deriv_l2_sq(f.mesh(), f.values()); }

double derivative_l1(const GraphFunction& f) { return kernels::deriv_l1(f.mesh(), f.values()); }

double mass(const GraphFunction& f) { return kernels::l2_inner(f.mesh(), f.values(), f.values()); }

double l2_inner(const GraphFunction& a, const GraphFunction& b) {
    return kernels::l2_inner(a.mesh(), a.values(), b.values());
}

EnergyBreakdown energy(const GraphFunction& f, double p) {
    if (!(p > 2.0)) throw std::invalid_argument("energy requires p > 2");
    EnergyBreakdown e;
    e.p = p;
    e.mass = mass(f);
    e.kinetic = 0.5 * derivative_l2_sq(f);
    e.potential = lp_norm_pow(f, p) / p;
    e.energy = e.kinetic - e.potential;
    return e;
}

GraphFunction project_mass(const GraphFunction& f, double mass_target) {
    if (!(mass_target > 0.0)) throw std::invalid_argument("target mass must be positive");
    const double m = mass(f);
    if (m <= 0.0) throw std::domain_error("cannot project the zero function onto a mass sphere");
    GraphFunction g = f;
    const double scale = std::sqrt(mass_target / m);
    for (auto& x : g.values()) x *= scale;
    return g;
}

double lumped_potential(const GraphFunction& f, double p) {
    return kernels::lumped_pot_pow(f.mesh(), f.values(), p) / p;
}

double solver_energy(const GraphFunction& f, double p) {
    return 0.5 * derivative_l2_sq(f) - lumped_potential(f, p);
}

GraphFunction energy_gradient(const GraphFunction& f, double p) {
    if (!(p > 2.0)) throw std::invalid_argument("energy_gradient requires p > 2");
    GraphFunction g(f.mesh_ptr());
    kernels::energy_gradient_into(f.mesh(), f.values(), p, f.mesh().grid().spec.boundary, g.values());
    return g;
}

}  // namespace gridnls
