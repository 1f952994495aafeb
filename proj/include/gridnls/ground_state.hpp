#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridnls/function_space.hpp"

namespace gridnls {

enum class StartPool {
    mixed,     // deterministic gaussian widths + near-constant, then random
    gaussian,  // gaussian starts only
    random,    // seeded random starts only
};
const char* to_string(StartPool s);
StartPool start_pool_from_string(const std::string& name);

struct SolverConfig {
    double p = 4.0;
    double mass_target = 1.0;  // the constraint mass
    double tau0 = 0.25;
    double backtrack = 0.5;
    int max_iterations = 20000;
    double energy_tol = 1e-10;  // absolute floor for sign decisions
    double grad_tol = 1e-8;
    int multistarts = 8;
    std::uint64_t seed = 0;
    StartPool start_pool = StartPool::mixed;
    std::optional<GraphFunction> initial;  // replaces the built-in start pool

    void validate() const;  // throws, listing every violated constraint
};

// One normalized-gradient-flow run: explicit step, backtracking until the
// objective does not increase, projection back onto the mass sphere.
struct SolveRun {
    int iterations = 0;
    bool converged = false;
    bool blew_up = false;
    bool energy_monotone = true;       // accepted objective values never rose
    double max_mass_drift = 0.0;       // max relative mass error over iterates
    double final_objective = 0.0;      // lumped-potential objective
    double projected_grad_norm = 0.0;  // tangential gradient norm at exit
};

struct GroundStateResult {
    GraphFunction minimizer;
    EnergyBreakdown breakdown;  // exact integrals of the final iterate
    SolveRun run;               // stats for the winning start
    int best_start = -1;
    int multistarts = 0;
    std::vector<double> start_energies;  // final exact energy per start
    bool any_blow_up = false;
    // Set when the zero-extendable small-mass regime applies (dirichlet,
    // p in [10/3,6], (2/p) C_p mu^{p/2-1} < 1/2): the energy then has a
    // provable nonnegative lower bound, and a negative result is an anomaly.
    bool small_mass_bound_applies = false;
    bool small_mass_bound_violated = false;
};

// Multistart minimization at fixed mass. Deterministic for a fixed seed.
GroundStateResult minimize(std::shared_ptr<const Mesh> mesh, const SolverConfig& config);

// Single flow from the given start (projected onto the sphere first).
SolveRun gradient_flow(GraphFunction& f, const SolverConfig& config);

struct BisectionStep {
    double mu = 0.0;
    double best_energy = 0.0;
    bool predicate = false;  // best energy < -energy_tol
    bool converged = false;
};

struct CriticalMassResult {
    double mu_estimate = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    std::vector<BisectionStep> history;
    std::vector<std::string> anomalies;
};

// Bisection on the mass against the negative-energy predicate; assumes the
// predicate is monotone in the mass and records any contradiction seen.
CriticalMassResult estimate_critical_mass(std::shared_ptr<const Mesh> mesh, double p, double mu_lo,
                                          double mu_hi, double tol_mu, SolverConfig base);

struct ProbeRow {
    double parameter = 0.0;  // lambda or sigma
    EnergyBreakdown energy;
};

struct ProbeResult {
    std::vector<ProbeRow> rows;
    double min_energy = 0.0;
    double threshold = 0.0;
    bool tail_strictly_decreasing = false;
    bool unbounded_suspected = false;
};

// Mass-preserving concentration family sqrt(l)*phi(l s) along the central
// x-line; the energy trend over increasing l probes unboundedness from
// below. Throws if the schedule outruns the mesh (l*h > 1).
ProbeResult concentration_probe(std::shared_ptr<const Mesh> mesh, double p, double mu,
                                const std::vector<double>& lambdas, double threshold);

// Wide-bump family g(|v|/sigma) probing the three-dimensional spreading
// mechanism. Throws if sigma exceeds the truncation radius.
ProbeResult spreading_probe(std::shared_ptr<const Mesh> mesh, double p, double mu,
                            const std::vector<double>& sigmas);

enum class PhaseClass {
    negative_ground_state,
    nonnegative_no_minimizer_suspected,
    unbounded_below_suspected,
};
const char* to_string(PhaseClass c);

struct PhasePoint {
    double p = 0.0;
    double mu = 0.0;
    double best_energy = 0.0;
    PhaseClass classification = PhaseClass::nonnegative_no_minimizer_suspected;
    bool converged = false;
    bool concentration_fired = false;
    double concentration_min_energy = 0.0;
    double spreading_min_energy = 0.0;
    std::string error;  // nonempty when the cell failed; never aborts the sweep
};

std::vector<PhasePoint> phase_diagram(std::shared_ptr<const Mesh> mesh,
                                      const std::vector<double>& ps,
                                      const std::vector<double>& mus, const SolverConfig& base,
                                      double unbounded_threshold);

}  // namespace gridnls
