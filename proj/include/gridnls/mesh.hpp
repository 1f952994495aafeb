#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "gridnls/grid.hpp"

namespace gridnls {

// Uniform subdivision of every edge into n intervals of step h = ell/n.
// Node ordering is deterministic: the grid vertices first (by vertex index),
// then the n-1 interior samples of each edge, edge by edge, tail to head.
class Mesh {
public:
    Mesh(std::shared_ptr<const MetricGrid> grid, int samples_per_edge);

    const MetricGrid& grid() const { return *grid_; }
    std::shared_ptr<const MetricGrid> grid_ptr() const { return grid_; }
    int samples_per_edge() const { return n_; }
    double step() const { return h_; }

    std::size_t node_count() const { return node_count_; }
    std::size_t interval_count() const {
        return static_cast<std::size_t>(grid_->edge_count()) * static_cast<std::size_t>(n_);
    }

    std::size_t vertex_node(int v) const { return static_cast<std::size_t>(v); }

    // Sample j of edge e, j in [0, n]: 0 is the tail vertex, n the head.
    std::size_t edge_node(int e, int j) const {
        if (j == 0) return static_cast<std::size_t>(grid_->edges[static_cast<std::size_t>(e)].tail);
        if (j == n_) return static_cast<std::size_t>(grid_->edges[static_cast<std::size_t>(e)].head);
        return static_cast<std::size_t>(grid_->vertex_count()) +
               static_cast<std::size_t>(e) * static_cast<std::size_t>(n_ - 1) +
               static_cast<std::size_t>(j - 1);
    }

    // Interval idx = e*n + k joins edge_node(e,k) and edge_node(e,k+1).
    std::pair<std::size_t, std::size_t> interval_nodes(std::size_t idx) const {
        const int e = static_cast<int>(idx / static_cast<std::size_t>(n_));
        const int k = static_cast<int>(idx % static_cast<std::size_t>(n_));
        return {edge_node(e, k), edge_node(e, k + 1)};
    }

    std::array<double, 3> node_coord(std::size_t node) const;

    bool is_boundary_vertex_node(std::size_t node) const {
        return node < static_cast<std::size_t>(grid_->vertex_count()) &&
               grid_->is_boundary_vertex(static_cast<int>(node));
    }

    // Trapezoid (lumped) quadrature weight of each node: h/2 per incident
    // interval.
    const std::vector<double>& lumped_weights() const { return lumped_w_; }

    // CSR adjacency over mesh nodes (each neighbor shares one interval).
    const std::vector<std::size_t>& neighbor_offsets() const { return nbr_off_; }
    const std::vector<std::size_t>& neighbor_ids() const { return nbr_ids_; }

private:
    std::shared_ptr<const MetricGrid> grid_;
    int n_;
    double h_;
    std::size_t node_count_;
    std::vector<double> lumped_w_;
    std::vector<std::size_t> nbr_off_;
    std::vector<std::size_t> nbr_ids_;
};

}  // namespace gridnls
