#pragma once

#include "gridnls/graph_function.hpp"

namespace gridnls {

struct EnergyBreakdown {
    double mass = 0.0;       // ||f||_2^2
    double kinetic = 0.0;    // (1/2) ||f'||_2^2
    double potential = 0.0;  // (1/p) ||f||_p^p
    double energy = 0.0;     // kinetic - potential
    double p = 0.0;
};

// Norms are exact for the piecewise-linear model (closed-form interval
// integrals), so inequality verdicts carry no quadrature error.
double lp_norm(const GraphFunction& f, double p);  // throws if p < 1
double lp_norm_pow(const GraphFunction& f, double p);
double sup_norm(const GraphFunction& f);
double derivative_l2_sq(const GraphFunction& f);
double derivative_l1(const GraphFunction& f);
double mass(const GraphFunction& f);
double l2_inner(const GraphFunction& a, const GraphFunction& b);

EnergyBreakdown energy(const GraphFunction& f, double p);  // throws if p <= 2

// Scales f onto the mass sphere; throws std::domain_error on a zero function.
GraphFunction project_mass(const GraphFunction& f, double mass_target);

// The descent objective: exact kinetic term, trapezoid-lumped potential.
// energy_gradient is its exact derivative in the node values; the lumped and
// exact potentials coincide as h -> 0.
double lumped_potential(const GraphFunction& f, double p);
double solver_energy(const GraphFunction& f, double p);
GraphFunction energy_gradient(const GraphFunction& f, double p);  // throws if p <= 2

}  // namespace gridnls
