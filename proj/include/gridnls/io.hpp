#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gridnls/ground_state.hpp"
#include "gridnls/inequalities.hpp"

namespace gridnls::io {

inline constexpr int kSchemaVersion = 1;

nlohmann::json spec_to_json(const GridSpec& spec);
GridSpec spec_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const MetricGrid& grid);

// Mesh descriptor plus the flat node-value array in the deterministic node
// ordering (vertices first, then per-edge interior samples).
nlohmann::json function_to_json(const GraphFunction& f);
GraphFunction function_from_json(const nlohmann::json& j);

std::string function_to_csv(const GraphFunction& f);  // x,y,z,value per node

nlohmann::json report_to_json(const InequalityReport& r);
std::string reports_to_csv(const std::vector<InequalityReport>& reports);

nlohmann::json probe_to_json(const ProbeResult& r);
std::string probe_to_csv(const ProbeResult& r);

nlohmann::json ground_state_to_json(const GroundStateResult& r);
nlohmann::json critical_mass_to_json(const CriticalMassResult& r);

nlohmann::json phase_point_to_json(const PhasePoint& p);
std::string phase_points_to_csv(const std::vector<PhasePoint>& points);

// Writes via a sibling temporary file and rename, so readers never observe
// a partial document. Throws std::runtime_error on I/O failure.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace gridnls::io
