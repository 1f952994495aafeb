#include "gridnls/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gridnls {

const char* to_string(Boundary b) {
    return b == Boundary::dirichlet ? "dirichlet" : "neumann";
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "dirichlet") return Boundary::dirichlet;
    if (s == "neumann") return Boundary::neumann;
    throw std::invalid_argument("unknown boundary '" + s + "' (expected dirichlet or neumann)");
}

void GridSpec::validate() const {
    std::vector<std::string> problems;
    if (dimension < 1 || dimension > 3)
        problems.push_back("dimension must be 1, 2, or 3 (got " + std::to_string(dimension) + ")");
    if (!(edge_length > 0.0) || !std::isfinite(edge_length))
        problems.push_back("edge_length must be a positive finite real");
    if (radius < 1)
        problems.push_back("radius must be >= 1 (got " + std::to_string(radius) + ")");
    if (!problems.empty()) {
        std::ostringstream oss;
        oss << "invalid grid spec:";
        for (const auto& p : problems) oss << " " << p << ";";
        throw std::invalid_argument(oss.str());
    }
}

int MetricGrid::vertex_index(const std::array<int, 3>& coord) const {
    const int R = spec.radius;
    const int side = 2 * R + 1;
    int idx = 0;
    for (int a = 0; a < spec.dimension; ++a) {
        if (coord[static_cast<std::size_t>(a)] < -R || coord[static_cast<std::size_t>(a)] > R) return -1;
        idx = idx * side + (coord[static_cast<std::size_t>(a)] + R);
    }
    for (int a = spec.dimension; a < 3; ++a)
        if (coord[static_cast<std::size_t>(a)] != 0) return -1;
    return idx;
}

std::array<double, 3> MetricGrid::vertex_coord(int v) const {
    const auto& c = vertices[static_cast<std::size_t>(v)];
    return {c[0] * spec.edge_length, c[1] * spec.edge_length, c[2] * spec.edge_length};
}

int MetricGrid::line_index(int axis, int ortho0, int ortho1) const {
    if (axis < 0 || axis >= spec.dimension) throw std::out_of_range("axis out of range");
    const int R = spec.radius;
    const int side = 2 * R + 1;
    if (spec.dimension == 1) return 0;
    if (spec.dimension == 2) return ortho0 + R;
    return (ortho0 + R) * side + (ortho1 + R);
}

MetricGrid build_grid(const GridSpec& spec) {
    spec.validate();
    MetricGrid g;
    g.spec = spec;
    const int d = spec.dimension;
    const int R = spec.radius;
    const int side = 2 * R + 1;

    // Vertices in lexicographic (i,j,k) order over the used axes.
    std::array<int, 3> lo{-R, -R, -R}, hi{R, R, R};
    for (int a = d; a < 3; ++a) lo[static_cast<std::size_t>(a)] = hi[static_cast<std::size_t>(a)] = 0;
    for (int i = lo[0]; i <= hi[0]; ++i)
        for (int j = lo[1]; j <= hi[1]; ++j)
            for (int k = lo[2]; k <= hi[2]; ++k) g.vertices.push_back({i, j, k});

    g.boundary_flag_.assign(g.vertices.size(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& c = g.vertices[static_cast<std::size_t>(v)];
        for (int a = 0; a < d; ++a)
            if (std::abs(c[static_cast<std::size_t>(a)]) == R) {
                g.boundary_flag_[static_cast<std::size_t>(v)] = 1;
                break;
            }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.boundary_flag_[static_cast<std::size_t>(v)]) g.boundary_vertices.push_back(v);

    // Edges: lexicographic in the tail lattice point, then axis.
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto c = g.vertices[static_cast<std::size_t>(v)];
        for (int a = 0; a < d; ++a) {
            if (c[static_cast<std::size_t>(a)] == R) continue;
            auto c2 = c;
            ++c2[static_cast<std::size_t>(a)];
            g.edges.push_back({v, g.vertex_index(c2), a, spec.edge_length});
        }
    }

    g.degree_.assign(g.vertices.size(), 0);
    for (const auto& e : g.edges) {
        ++g.degree_[static_cast<std::size_t>(e.tail)];
        ++g.degree_[static_cast<std::size_t>(e.head)];
    }

    // Lines: for each axis, one maximal path per orthogonal coordinate pair.
    g.lines.assign(static_cast<std::size_t>(d), {});
    g.line_of_edge_.assign(g.edges.size(), -1);
    for (int a = 0; a < d; ++a) {
        int n_lines = 1;
        for (int b = 0; b < d; ++b)
            if (b != a) n_lines *= side;
        g.lines[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(n_lines),
                                                    std::vector<int>());
        for (auto& line : g.lines[static_cast<std::size_t>(a)]) line.reserve(static_cast<std::size_t>(2 * R));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[static_cast<std::size_t>(e)];
        const auto& c = g.vertices[static_cast<std::size_t>(ed.tail)];
        std::array<int, 2> ortho{0, 0};
        int m = 0;
        for (int b = 0; b < d; ++b)
            if (b != ed.axis) ortho[static_cast<std::size_t>(m++)] = c[static_cast<std::size_t>(b)];
        const int li = g.line_index(ed.axis, ortho[0], ortho[1]);
        g.lines[static_cast<std::size_t>(ed.axis)][static_cast<std::size_t>(li)].push_back(e);
        g.line_of_edge_[static_cast<std::size_t>(e)] = li;
    }
    // Edge enumeration visits tails lexicographically, so edges within one
    // line already run -R .. R-1.
    return g;
}

const std::vector<std::vector<int>>& line_decomposition(const MetricGrid& grid, int axis) {
    if (axis < 0 || axis >= grid.spec.dimension)
        throw std::out_of_range("axis " + std::to_string(axis) + " out of range for dimension " +
                                std::to_string(grid.spec.dimension));
    return grid.lines[static_cast<std::size_t>(axis)];
}

namespace {

void check(ValidationReport& rep, bool ok, const std::string& name, const std::string& detail) {
    if (!ok) rep.issues.push_back({name, detail});
}

}  // namespace

ValidationReport validate(const MetricGrid& g) {
    ValidationReport rep;
    const int d = g.spec.dimension;
    const int R = g.spec.radius;
    const double ell = g.spec.edge_length;

    long long expect_v = 1;
    for (int a = 0; a < d; ++a) expect_v *= 2 * R + 1;
    long long expect_e = d * 2 * R;
    for (int a = 0; a < d - 1; ++a) expect_e *= 2 * R + 1;

    check(rep, g.vertex_count() == expect_v, "vertex count",
          "expected " + std::to_string(expect_v) + ", got " + std::to_string(g.vertex_count()));
    check(rep, g.edge_count() == expect_e, "edge count",
          "expected " + std::to_string(expect_e) + ", got " + std::to_string(g.edge_count()));

    std::vector<int> degree(g.vertices.size(), 0);
    bool endpoints_ok = true;
    for (const auto& e : g.edges) {
        if (e.tail < 0 || e.tail >= g.vertex_count() || e.head < 0 || e.head >= g.vertex_count()) {
            endpoints_ok = false;
            continue;
        }
        ++degree[static_cast<std::size_t>(e.tail)];
        ++degree[static_cast<std::size_t>(e.head)];
    }
    check(rep, endpoints_ok, "edge endpoints", "edge references a vertex outside the grid");

    bool interior_deg_ok = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool interior = true;
        for (int a = 0; a < d; ++a)
            if (std::abs(g.vertices[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)]) == R)
                interior = false;
        if (interior && degree[static_cast<std::size_t>(v)] != 2 * d) interior_deg_ok = false;
    }
    check(rep, interior_deg_ok, "interior degree", "an interior vertex does not have degree 2d");

    bool lengths_ok = true;
    for (const auto& e : g.edges)
        if (e.length != ell) lengths_ok = false;
    check(rep, lengths_ok, "edge lengths", "an edge length differs from the spec edge length");

    // Lines must partition the edge set: full coverage, no duplicates.
    std::vector<int> seen(g.edges.size(), 0);
    bool indices_ok = true;
    bool line_sizes_ok = true;
    for (const auto& axis_lines : g.lines) {
        for (const auto& line : axis_lines) {
            if (static_cast<int>(line.size()) != 2 * R) line_sizes_ok = false;
            for (int e : line) {
                if (e < 0 || e >= g.edge_count()) {
                    indices_ok = false;
                    continue;
                }
                ++seen[static_cast<std::size_t>(e)];
            }
        }
    }
    check(rep, indices_ok, "line edge indices", "a line references a nonexistent edge");
    check(rep, line_sizes_ok, "line lengths", "a line does not consist of 2R edges");
    bool cover_ok = true, dup_ok = true;
    for (std::size_t e = 0; e < seen.size(); ++e) {
        if (seen[e] == 0) cover_ok = false;
        if (seen[e] > 1) dup_ok = false;
    }
    check(rep, cover_ok, "lines partition edges", "an edge belongs to no line");
    check(rep, dup_ok, "lines partition edges", "an edge belongs to more than one line");

    check(rep, static_cast<int>(g.lines.size()) == d, "line axes",
          "expected one line family per axis");
    return rep;
}

}  // namespace gridnls
