#pragma once

// Independent oracles for the test suites: composite-Simpson quadrature
// (never the closed forms used by the library) and finite-difference
// gradients. Kept deliberately naive.

#include <functional>
#include <vector>

#include "gridnls/function_space.hpp"

namespace oracles {

using ScalarField = std::function<double(const std::array<double, 3>&)>;

// Composite Simpson over every mesh interval of the piecewise-linear
// interpolant, with `panels` Simpson panels per interval.
double interpolant_lp_pow(const gridnls::GraphFunction& f, double p, int panels = 10);

// Composite Simpson of |g|^p along every grid edge with `panels` panels per
// edge (arc-length parameterization).
double smooth_lp_pow(const gridnls::Mesh& mesh, const ScalarField& g, double p, int panels = 1280);

// Same for |dg/ds|^2 with ds the arc-length derivative along each edge.
double smooth_deriv_l2_sq(const gridnls::Mesh& mesh,
                          const std::function<double(const std::array<double, 3>&, int axis)>& dg,
                          int panels = 1280);

// Central finite differences of the solver objective in every node value.
std::vector<double> fd_solver_gradient(const gridnls::GraphFunction& f, double p,
                                       double step = 1e-6);

// Lattice edge count of the truncated grid by direct pair enumeration.
long long brute_force_edge_count(int dimension, int radius);

}  // namespace oracles
