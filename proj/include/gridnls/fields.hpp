#pragma once

#include <cstdint>
#include <random>

#include "gridnls/graph_function.hpp"

namespace gridnls::fields {

// iid uniform node values in [-1, 1], boundary vertices zeroed.
GraphFunction random_zero_boundary(std::shared_ptr<const Mesh> mesh, std::mt19937_64& rng);

// exp(-|x - center|^2 / width^2), evaluated at embedded coordinates.
GraphFunction gaussian_bump(std::shared_ptr<const Mesh> mesh, const std::array<double, 3>& center,
                            double width, bool zero_boundary);

// sqrt(lambda) * sech(lambda * s) along the central line of the given axis
// (s is the signed arclength from the central vertex); zero elsewhere.
// The pinch at line vertices decays into incident edges over one interval.
GraphFunction line_concentration(std::shared_ptr<const Mesh> mesh, int axis, double lambda);

// sech(kappa (s - s0))^(2/(p-2)) along the central line of the given axis.
GraphFunction line_soliton(std::shared_ptr<const Mesh> mesh, int axis, double kappa, double s0,
                           double p, bool zero_boundary);

// g(r / sigma) with r the sup-norm radius of the node and g a cos^2 taper
// supported on [0, 1]; vanishes outside radius sigma.
GraphFunction radial_bump(std::shared_ptr<const Mesh> mesh, double sigma);

// Product of per-axis sech(kappa_a (x_a - c_a)) over the used axes.
GraphFunction tensor_bump(std::shared_ptr<const Mesh> mesh, const std::array<double, 3>& center,
                          const std::array<double, 3>& kappa, bool zero_boundary);

// Zero everywhere except one edge, rising linearly to `peak` at the edge
// midpoint. Requires an even number of samples per edge.
GraphFunction tent_on_edge(std::shared_ptr<const Mesh> mesh, int edge, double peak = 1.0);

}  // namespace gridnls::fields
