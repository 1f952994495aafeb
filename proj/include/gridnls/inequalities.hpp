#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridnls/graph_function.hpp"

namespace gridnls {

enum class InequalityForm {
    gn_1d,          // ||f||_p^p <= C1 ||f||_2^{p/2+1} ||f'||_2^{p/2-1},  p in [2, inf)
    gn_infty,       // ||f||_inf^2 <= ||f||_2 ||f'||_2
    sobolev_1d,     // ||f||_inf <= C ||f'||_1
    sobolev_2d,     // ||f||_2 <= C ||f'||_1            (2d grids)
    sobolev_3d,     // ||f||_{3/2}^{3/2} <= 12 ell ||f'||_1^{3/2}  (3d grids)
    gn_3d,          // ||f||_p^p <= C3 ||f||_2^{3-p/2} ||f'||_2^{3p/2-3},  p in [2, 6]
    gn_critical,    // ||f||_p^p <= Cp ||f||_2^{p-2} ||f'||_2^2,  p in [10/3, 6]
    holder_interp,  // ||f||_p^p <= ||f||_2^{2t} ||f||_6^{6(1-t)},  t = (6-p)/4, p in (2, 6)
};

const char* to_string(InequalityForm form);
InequalityForm inequality_form_from_string(const std::string& name);
bool form_takes_power(InequalityForm form);

enum class Verdict { satisfied, violated, vacuous };
const char* to_string(Verdict v);

// Relative slack applied to provable bounds; everything upstream is a
// closed-form integral, so only rounding error remains.
inline constexpr double kBoundTolerance = 1e-9;

struct InequalityReport {
    InequalityForm form{};
    std::optional<double> p;
    double left = 0.0;   // full left-hand side
    double right = 0.0;  // right-hand side without its constant
    double ratio = 0.0;  // left/right; 1 when both vanish, inf when only right does
    std::optional<double> provable_bound;
    Verdict verdict = Verdict::satisfied;
    // gn_infty only: the ratio against the exponents as printed in the
    // source inequality (not scale-invariant; logged without a verdict).
    std::optional<double> printed_form_ratio;
};

// The constant each check may certify, when one is available:
//   sobolev_1d: 1/2            sobolev_3d: 12*ell        gn_1d, gn_infty: 1
//   gn_3d: (96*ell)^(p-2)      gn_critical: (96*ell)^((6-p)/2)
//   holder_interp: 1           sobolev_2d: none
std::optional<double> provable_bound(InequalityForm form, double p, double edge_length);

// All checks below require f to vanish at the boundary vertices (so it is
// zero-extendable to the infinite grid), except holder_interp which is a
// pure interpolation statement. Dimension preconditions as listed above.
InequalityReport check_gn_1d(const GraphFunction& f, double p);
InequalityReport check_gn_infty(const GraphFunction& f);
InequalityReport check_sobolev_1d(const GraphFunction& f);
InequalityReport check_sobolev_2d(const GraphFunction& f);
InequalityReport check_sobolev_3d(const GraphFunction& f);
InequalityReport check_gn_3d(const GraphFunction& f, double p);
InequalityReport check_gn_critical(const GraphFunction& f, double p);
InequalityReport check_holder_interp(const GraphFunction& f, double p);
InequalityReport check_form(const GraphFunction& f, InequalityForm form,
                            std::optional<double> p = std::nullopt);

// Pointwise path bound behind the 3d Sobolev inequality: at a point on an
// x-line, |f(x)|^{3/2} is controlled by the derivative mass along the three
// escape paths through the left endpoint of the containing cell.
struct PathSample {
    std::size_t node = 0;
    double value_pow = 0.0;  // |f(x)|^{3/2}
    double bound = 0.0;      // the path product
    bool ok = true;
};

struct PathEstimateReport {
    std::vector<PathSample> samples;
    std::size_t violations = 0;
    bool ok() const { return violations == 0; }
};

// sample_nodes must be interior sample nodes of axis-0 edges.
PathEstimateReport check_path_estimate(const GraphFunction& f,
                                       const std::vector<std::size_t>& sample_nodes);
std::vector<std::size_t> sample_x_axis_nodes(const Mesh& mesh, std::size_t count,
                                             std::uint64_t seed);

// Empirical lower bounds for optimal constants by multistart ratio ascent.
enum class WitnessFamily { random_field, gaussian, line_soliton, tensor };
const char* to_string(WitnessFamily f);
WitnessFamily witness_family_from_string(const std::string& name);

struct AscentConfig {
    int multistarts = 8;
    int param_iterations = 60;  // coordinate-search iterations on family parameters
    int node_sweeps = 2;        // greedy node-level ascent passes (0 disables)
};

struct ConstantEstimate {
    double best_ratio = 0.0;  // empirical lower bound for the optimal constant
    int best_start = -1;
    InequalityReport report;  // report for the witness
    GraphFunction witness;
    int evaluations = 0;
};

ConstantEstimate estimate_constant(std::shared_ptr<const Mesh> mesh, InequalityForm form, double p,
                                   WitnessFamily family, const AscentConfig& config,
                                   std::uint64_t seed);

}  // namespace gridnls
