#include "gridnls/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gridnls::io {

using nlohmann::json;

namespace {

json number_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;
}

std::string csv_double(double x) {
    std::ostringstream oss;
    oss.precision(17);
    oss << x;
    return oss.str();
}

}  // namespace

json spec_to_json(const GridSpec& spec) {
    return {{"dimension", spec.dimension},
            {"edge_length", spec.edge_length},
            {"radius", spec.radius},
            {"boundary", to_string(spec.boundary)}};
}

GridSpec spec_from_json(const json& j) {
    GridSpec spec;
    spec.dimension = j.at("dimension").get<int>();
    spec.edge_length = j.at("edge_length").get<double>();
    spec.radius = j.at("radius").get<int>();
    spec.boundary = boundary_from_string(j.at("boundary").get<std::string>());
    spec.validate();
    return spec;
}

json grid_to_json(const MetricGrid& grid) {
    json vertices = json::array();
    for (const auto& v : grid.vertices) vertices.push_back({v[0], v[1], v[2]});
    json edges = json::array();
    for (const auto& e : grid.edges)
        edges.push_back({{"tail", e.tail}, {"head", e.head}, {"axis", e.axis}});
    json lines = json::object();
    const char* axis_names[3] = {"x", "y", "z"};
    for (int a = 0; a < grid.spec.dimension; ++a)
        lines[axis_names[a]] = grid.lines[static_cast<std::size_t>(a)];
    return {{"schema_version", kSchemaVersion},
            {"kind", "grid"},
            {"spec", spec_to_json(grid.spec)},
            {"vertices", vertices},
            {"edges", edges},
            {"lines", lines},
            {"boundary_vertices", grid.boundary_vertices}};
}

json function_to_json(const GraphFunction& f) {
    return {{"schema_version", kSchemaVersion},
            {"kind", "graph_function"},
            {"grid_spec", spec_to_json(f.mesh().grid().spec)},
            {"samples_per_edge", f.mesh().samples_per_edge()},
            {"values", f.values()}};
}

GraphFunction function_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != "graph_function")
        throw std::invalid_argument("document is not a graph_function");
    const GridSpec spec = spec_from_json(j.at("grid_spec"));
    auto grid = std::make_shared<MetricGrid>(build_grid(spec));
    auto mesh = std::make_shared<Mesh>(grid, j.at("samples_per_edge").get<int>());
    GraphFunction f(mesh);
    const auto values = j.at("values").get<std::vector<double>>();
    if (values.size() != f.values().size())
        throw std::invalid_argument("value array does not match the mesh node count");
    f.values() = values;
    return f;
}

std::string function_to_csv(const GraphFunction& f) {
    std::ostringstream oss;
    oss << "x,y,z,value\n";
    for (std::size_t q = 0; q < f.values().size(); ++q) {
        const auto c = f.mesh().node_coord(q);
        oss << csv_double(c[0]) << ',' << csv_double(c[1]) << ',' << csv_double(c[2]) << ','
            << csv_double(f[q]) << '\n';
    }
    return oss.str();
}

json report_to_json(const InequalityReport& r) {
    json j{{"form", to_string(r.form)},
           {"left", r.left},
           {"right", r.right},
           {"ratio", number_or_null(r.ratio)},
           {"verdict", to_string(r.verdict)}};
    j["p"] = r.p ? json(*r.p) : json(nullptr);
    j["provable_bound"] = r.provable_bound ? json(*r.provable_bound) : json(nullptr);
    if (r.printed_form_ratio) j["printed_form_ratio"] = *r.printed_form_ratio;
    return j;
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
    std::ostringstream oss;
    oss << "form,p,left,right,ratio,provable_bound,verdict\n";
    for (const auto& r : reports) {
        oss << to_string(r.form) << ',' << (r.p ? csv_double(*r.p) : "") << ','
            << csv_double(r.left) << ',' << csv_double(r.right) << ',' << csv_double(r.ratio)
            << ',' << (r.provable_bound ? csv_double(*r.provable_bound) : "") << ','
            << to_string(r.verdict) << '\n';
    }
    return oss.str();
}

json probe_to_json(const ProbeResult& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"parameter", row.parameter},
                        {"mass", row.energy.mass},
                        {"kinetic", row.energy.kinetic},
                        {"potential", row.energy.potential},
                        {"energy", row.energy.energy}});
    return {{"rows", rows},
            {"min_energy", r.min_energy},
            {"threshold", number_or_null(r.threshold)},
            {"tail_strictly_decreasing", r.tail_strictly_decreasing},
            {"unbounded_suspected", r.unbounded_suspected}};
}

std::string probe_to_csv(const ProbeResult& r) {
    std::ostringstream oss;
    oss << "parameter,mass,kinetic,potential,energy\n";
    for (const auto& row : r.rows)
        oss << csv_double(row.parameter) << ',' << csv_double(row.energy.mass) << ','
            << csv_double(row.energy.kinetic) << ',' << csv_double(row.energy.potential) << ','
            << csv_double(row.energy.energy) << '\n';
    return oss.str();
}

json ground_state_to_json(const GroundStateResult& r) {
    return {{"best_start", r.best_start},
            {"multistarts", r.multistarts},
            {"start_energies", r.start_energies},
            {"mass", r.breakdown.mass},
            {"kinetic", r.breakdown.kinetic},
            {"potential", r.breakdown.potential},
            {"energy", r.breakdown.energy},
            {"p", r.breakdown.p},
            {"iterations", r.run.iterations},
            {"converged", r.run.converged},
            {"blew_up", r.any_blow_up},
            {"energy_monotone", r.run.energy_monotone},
            {"max_mass_drift", r.run.max_mass_drift},
            {"projected_grad_norm", r.run.projected_grad_norm},
            {"small_mass_bound_applies", r.small_mass_bound_applies},
            {"small_mass_bound_violated", r.small_mass_bound_violated}};
}

json critical_mass_to_json(const CriticalMassResult& r) {
    json steps = json::array();
    for (const auto& s : r.history)
        steps.push_back({{"mu", s.mu},
                         {"best_energy", s.best_energy},
                         {"predicate", s.predicate},
                         {"converged", s.converged}});
    return {{"mu_estimate", r.mu_estimate},
            {"bracket_lo", r.bracket_lo},
            {"bracket_hi", r.bracket_hi},
            {"history", steps},
            {"anomalies", r.anomalies}};
}

json phase_point_to_json(const PhasePoint& p) {
    return {{"p", p.p},
            {"mu", p.mu},
            {"best_energy", number_or_null(p.best_energy)},
            {"classification", to_string(p.classification)},
            {"converged", p.converged},
            {"concentration_fired", p.concentration_fired},
            {"concentration_min_energy", number_or_null(p.concentration_min_energy)},
            {"spreading_min_energy", number_or_null(p.spreading_min_energy)},
            {"error", p.error}};
}

std::string phase_points_to_csv(const std::vector<PhasePoint>& points) {
    std::ostringstream oss;
    oss << "p,mu,best_energy,classification\n";
    for (const auto& pt : points)
        oss << csv_double(pt.p) << ',' << csv_double(pt.mu) << ',' << csv_double(pt.best_energy)
            << ',' << to_string(pt.classification) << '\n';
    return oss.str();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    const fs::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " +
                                 ec.message());
    }
}

}  // namespace gridnls::io
