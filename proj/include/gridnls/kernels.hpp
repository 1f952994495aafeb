#pragma once

#include <cstddef>
#include <vector>

#include "gridnls/mesh.hpp"

namespace gridnls::kernels {

// Exact integral of |a + (b-a)t/h|^p over t in [0,h]. Handles sign changes;
// switches to a 3-point Simpson rule when the endpoints nearly coincide
// (both branches agree to better than 1e-12 relative at the crossover).
double interval_abs_pow(double a, double b, double h, double p);

// OpenMP kernels. All reductions are slot-ordered so results are identical
// from run to run for a fixed thread count.

double lp_pow(const Mesh& mesh, const std::vector<double>& v, double p);  // ∫ |f|^p
double deriv_l2_sq(const Mesh& mesh, const std::vector<double>& v);       // ∫ f'^2
double deriv_l1(const Mesh& mesh, const std::vector<double>& v);          // ∫ |f'|
double sup_abs(const std::vector<double>& v);
double l2_inner(const Mesh& mesh, const std::vector<double>& a, const std::vector<double>& b);
double lumped_pot_pow(const Mesh& mesh, const std::vector<double>& v, double p);  // Σ w |v|^p

// d/dv of (1/2)∫f'^2 - (1/p)Σ w|v|^p. Dirichlet zeroes the entries at
// boundary vertices.
void energy_gradient_into(const Mesh& mesh, const std::vector<double>& v, double p,
                          Boundary boundary, std::vector<double>& out);

// Plain single-threaded loops, kept as the reference implementation the
// parallel kernels are tested and benchmarked against.
namespace serial {

double lp_pow(const Mesh& mesh, const std::vector<double>& v, double p);
double deriv_l2_sq(const Mesh& mesh, const std::vector<double>& v);
double deriv_l1(const Mesh& mesh, const std::vector<double>& v);
double sup_abs(const std::vector<double>& v);
double l2_inner(const Mesh& mesh, const std::vector<double>& a, const std::vector<double>& b);
double lumped_pot_pow(const Mesh& mesh, const std::vector<double>& v, double p);
void energy_gradient_into(const Mesh& mesh, const std::vector<double>& v, double p,
                          Boundary boundary, std::vector<double>& out);

}  // namespace serial

}  // namespace gridnls::kernels
