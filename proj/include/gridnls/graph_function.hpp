#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gridnls/mesh.hpp"

namespace gridnls {

// Edge-wise piecewise-linear field, continuous at vertices by construction:
// each vertex owns a single value shared by all incident edges.
class GraphFunction {
public:
    explicit GraphFunction(std::shared_ptr<const Mesh> mesh)
        : mesh_(std::move(mesh)), values_(mesh_->node_count(), 0.0) {}

    const Mesh& mesh() const { return *mesh_; }
    std::shared_ptr<const Mesh> mesh_ptr() const { return mesh_; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    double& operator[](std::size_t node) { return values_[node]; }
    double operator[](std::size_t node) const { return values_[node]; }

    bool vanishes_on_boundary() const;
    // Zeroes the values at boundary vertices.
    void clamp_boundary();

private:
    std::shared_ptr<const Mesh> mesh_;
    std::vector<double> values_;
};

using PointwiseRule = std::function<double(const std::array<double, 3>&)>;

// Evaluates the rule at every mesh node's embedded coordinate; vertex values
// are assigned once. Throws std::domain_error on a non-finite value.
GraphFunction sample(std::shared_ptr<const Mesh> mesh, const PointwiseRule& rule);

}  // namespace gridnls
