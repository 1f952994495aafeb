#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridnls/ground_state.hpp"
#include "gridnls/inequalities.hpp"

namespace gridnls::cli {

// Parsed and validated command line for one run. Unknown flags are
// rejected; a config file (--config) provides defaults that flags override.
struct RunConfig {
    std::string subcommand;

    GridSpec grid;
    int samples_per_edge = 8;
    std::uint64_t seed = 0;

    std::string out_path;       // empty: JSON to stdout
    std::string format = "json";
    bool no_timestamp = false;

    // check-inequalities
    std::vector<InequalityForm> forms;
    std::vector<double> powers;
    int field_count = 100;
    int path_samples = 0;
    bool inject_violation = false;  // test hook: appends a fabricated violation

    // estimate-constants
    WitnessFamily family = WitnessFamily::gaussian;
    AscentConfig ascent;
    bool include_witness = false;

    // ground-state / phase-diagram
    SolverConfig solver;
    std::string init_kind = "auto";  // auto | gaussian | random | file
    std::string init_file;
    std::string minimizer_out;
    bool critical_mass = false;
    double mu_lo = 0.01, mu_hi = 4.0, tol_mu = 1e-3;

    std::vector<double> p_list;
    std::vector<double> mu_list;
    double threshold = -1.0;

    // probe
    std::string probe_kind = "concentration";
    double schedule_min = 0.25, schedule_max = 0.0;  // 0: derived from the mesh
    int schedule_count = 12;
    bool linear_schedule = false;
};

// Throws std::invalid_argument with every invalid field listed at once.
RunConfig parse_config(const std::vector<std::string>& args);

// Executes the subcommand. Exit code 0 on success, 1 on an inequality
// violation or solver anomaly, 2 on usage or I/O errors.
int run(const RunConfig& config);

int run_cli(int argc, const char* const* argv);

}  // namespace gridnls::cli
