#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gridnls {

enum class Boundary { dirichlet, neumann };

const char* to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

// Truncated grid graph: lattice points (i,j,k)*ell with every index in
// [-radius, radius]; unused axes are pinned to index 0.
struct GridSpec {
    int dimension = 3;
    double edge_length = 1.0;
    int radius = 1;
    Boundary boundary = Boundary::neumann;

    // Throws std::invalid_argument listing every violated constraint.
    void validate() const;
};

struct Edge {
    int tail = 0;   // vertex index of the lower lattice endpoint
    int head = 0;
    int axis = 0;
    double length = 0.0;  // equals spec.edge_length on a well-formed grid
};

class MetricGrid {
public:
    GridSpec spec;
    std::vector<std::array<int, 3>> vertices;  // lattice coordinates
    std::vector<Edge> edges;                   // lexicographic in tail (i,j,k), then axis
    // lines[axis][line] = edge indices ordered along the axis, -R to R-1.
    // Lines are indexed lexicographically by the orthogonal lattice coordinates.
    std::vector<std::vector<std::vector<int>>> lines;
    std::vector<int> boundary_vertices;  // sorted vertex indices on truncation faces

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_boundary_vertex(int v) const { return boundary_flag_[static_cast<std::size_t>(v)] != 0; }

    // Index of the lattice point, or -1 if outside the truncation.
    int vertex_index(const std::array<int, 3>& coord) const;
    std::array<double, 3> vertex_coord(int v) const;

    // Line through the given orthogonal lattice coordinates (listed in
    // increasing-axis order, unused entries ignored). Throws on bad axis.
    int line_index(int axis, int ortho0, int ortho1) const;
    // Index of this edge's line within lines[edge.axis].
    int line_of_edge(int e) const { return line_of_edge_[static_cast<std::size_t>(e)]; }

    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }

    std::vector<char> boundary_flag_;  // derived; rebuilt by build_grid
    std::vector<int> degree_;
    std::vector<int> line_of_edge_;
};

MetricGrid build_grid(const GridSpec& spec);

// Ordered lines along one axis; concatenation over all axes covers every
// edge exactly once. Throws std::out_of_range on a bad axis.
const std::vector<std::vector<int>>& line_decomposition(const MetricGrid& grid, int axis);

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Re-checks every structural invariant on possibly hand-mutated data.
// Violations are data in the report, never exceptions.
ValidationReport validate(const MetricGrid& grid);

}  // namespace gridnls
