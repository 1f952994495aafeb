#include "gridnls/mesh.hpp"

#include <stdexcept>

namespace gridnls {

Mesh::Mesh(std::shared_ptr<const MetricGrid> grid, int samples_per_edge)
    : grid_(std::move(grid)), n_(samples_per_edge) {
    if (!grid_) throw std::invalid_argument("mesh requires a grid");
    if (n_ < 1) throw std::invalid_argument("samples_per_edge must be >= 1");
    h_ = grid_->spec.edge_length / n_;
    node_count_ = static_cast<std::size_t>(grid_->vertex_count()) +
                  static_cast<std::size_t>(grid_->edge_count()) * static_cast<std::size_t>(n_ - 1);

    lumped_w_.assign(node_count_, 0.0);
    std::vector<std::size_t> deg(node_count_, 0);
    for (std::size_t idx = 0; idx < interval_count(); ++idx) {
        const auto [a, b] = interval_nodes(idx);
        lumped_w_[a] += 0.5 * h_;
        lumped_w_[b] += 0.5 * h_;
        ++deg[a];
        ++deg[b];
    }

    nbr_off_.assign(node_count_ + 1, 0);
    for (std::size_t q = 0; q < node_count_; ++q) nbr_off_[q + 1] = nbr_off_[q] + deg[q];
    nbr_ids_.assign(nbr_off_.back(), 0);
    std::vector<std::size_t> fill(node_count_, 0);
    for (std::size_t idx = 0; idx < interval_count(); ++idx) {
        const auto [a, b] = interval_nodes(idx);
        nbr_ids_[nbr_off_[a] + fill[a]++] = b;
        nbr_ids_[nbr_off_[b] + fill[b]++] = a;
    }
}

std::array<double, 3> Mesh::node_coord(std::size_t node) const {
    const std::size_t nv = static_cast<std::size_t>(grid_->vertex_count());
    if (node < nv) return grid_->vertex_coord(static_cast<int>(node));
    const std::size_t rest = node - nv;
    const int e = static_cast<int>(rest / static_cast<std::size_t>(n_ - 1));
    const int j = static_cast<int>(rest % static_cast<std::size_t>(n_ - 1)) + 1;
    const auto& ed = grid_->edges[static_cast<std::size_t>(e)];
    auto c = grid_->vertex_coord(ed.tail);
    c[static_cast<std::size_t>(ed.axis)] += h_ * j;
    return c;
}

}  // namespace gridnls
