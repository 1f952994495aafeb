#include "gridnls/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gridnls/fields.hpp"
#include "gridnls/function_space.hpp"
#include "gridnls/kernels.hpp"
#include "gridnls/parallel.hpp"

namespace gridnls {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dimension(const GraphFunction& f, int d, const char* what) {
    if (f.mesh().grid().spec.dimension != d)
        throw std::invalid_argument(std::string(what) + " requires a grid of dimension " +
                                    std::to_string(d));
}

void require_zero_boundary(const GraphFunction& f, const char* what) {
    if (!f.vanishes_on_boundary())
        throw std::invalid_argument(std::string(what) +
                                    " requires the function to vanish at boundary vertices");
}

InequalityReport make_report(InequalityForm form, std::optional<double> p, double left,
                             double right, std::optional<double> bound) {
    InequalityReport r;
    r.form = form;
    r.p = p;
    r.left = left;
    r.right = right;
    r.provable_bound = bound;
    if (right == 0.0) {
        if (left == 0.0) {
            r.ratio = 1.0;
            r.verdict = Verdict::vacuous;
            return r;
        }
        r.ratio = kInf;
    } else {
        r.ratio = left / right;
    }
    r.verdict = (bound && r.ratio > *bound * (1.0 + kBoundTolerance)) ? Verdict::violated
                                                                      : Verdict::satisfied;
    return r;
}

double l2_from_lp(const GraphFunction& f) { return std::sqrt(lp_norm_pow(f, 2.0)); }

double line_deriv_l1(const GraphFunction& f, int axis, int line) {
    const Mesh& m = f.mesh();
    const auto& edges = m.grid().lines[static_cast<std::size_t>(axis)][static_cast<std::size_t>(line)];
    double acc = 0.0;
    for (int e : edges)
        for (int k = 0; k < m.samples_per_edge(); ++k)
            acc += std::abs(f[m.edge_node(e, k + 1)] - f[m.edge_node(e, k)]);
    return acc;
}

double edge_deriv_l1(const GraphFunction& f, int e) {
    const Mesh& m = f.mesh();
    double acc = 0.0;
    for (int k = 0; k < m.samples_per_edge(); ++k)
        acc += std::abs(f[m.edge_node(e, k + 1)] - f[m.edge_node(e, k)]);
    return acc;
}

}  // namespace

const char* to_string(InequalityForm form) {
    switch (form) {
        case InequalityForm::gn_1d: return "gn1d";
        case InequalityForm::gn_infty: return "gninfty";
        case InequalityForm::sobolev_1d: return "sobolev1d";
        case InequalityForm::sobolev_2d: return "sobolev2d";
        case InequalityForm::sobolev_3d: return "sobolev3d";
        case InequalityForm::gn_3d: return "gn3d";
        case InequalityForm::gn_critical: return "gncrit";
        case InequalityForm::holder_interp: return "holder";
    }
    return "?";
}

InequalityForm inequality_form_from_string(const std::string& name) {
    if (name == "gn1d") return InequalityForm::gn_1d;
    if (name == "gninfty") return InequalityForm::gn_infty;
    if (name == "sobolev1d") return InequalityForm::sobolev_1d;
    if (name == "sobolev2d") return InequalityForm::sobolev_2d;
    if (name == "sobolev3d") return InequalityForm::sobolev_3d;
    if (name == "gn3d") return InequalityForm::gn_3d;
    if (name == "gncrit") return InequalityForm::gn_critical;
    if (name == "holder") return InequalityForm::holder_interp;
    throw std::invalid_argument("unknown inequality form '" + name + "'");
}

bool form_takes_power(InequalityForm form) {
    switch (form) {
        case InequalityForm::gn_1d:
        case InequalityForm::gn_3d:
        case InequalityForm::gn_critical:
        case InequalityForm::holder_interp: return true;
        default: return false;
    }
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        case Verdict::vacuous: return "vacuous";
    }
    return "?";
}

std::optional<double> provable_bound(InequalityForm form, double p, double edge_length) {
    switch (form) {
        case InequalityForm::gn_1d: return 1.0;
        case InequalityForm::gn_infty: return 1.0;
        case InequalityForm::sobolev_1d: return 0.5;
        case InequalityForm::sobolev_2d: return std::nullopt;
        case InequalityForm::sobolev_3d: return 12.0 * edge_length;
        case InequalityForm::gn_3d: return std::pow(96.0 * edge_length, p - 2.0);
        case InequalityForm::gn_critical: return std::pow(96.0 * edge_length, 0.5 * (6.0 - p));
        case InequalityForm::holder_interp: return 1.0;
    }
    return std::nullopt;
}

InequalityReport check_gn_1d(const GraphFunction& f, double p) {
    if (p < 2.0) throw std::invalid_argument("gn1d requires p >= 2");
    require_zero_boundary(f, "gn1d");
    const double left = lp_norm_pow(f, p);
    const double l2 = l2_from_lp(f);
    const double dl2 = std::sqrt(derivative_l2_sq(f));
    const double right = std::pow(l2, 0.5 * p + 1.0) * std::pow(dl2, 0.5 * p - 1.0);
    return make_report(InequalityForm::gn_1d, p, left, right, 1.0);
}

InequalityReport check_gn_infty(const GraphFunction& f) {
    require_zero_boundary(f, "gninfty");
    const double sup = sup_norm(f);
    const double l2 = l2_from_lp(f);
    const double dl2 = std::sqrt(derivative_l2_sq(f));
    auto r = make_report(InequalityForm::gn_infty, std::nullopt, sup * sup, l2 * dl2, 1.0);
    // Exponents as printed read ||f||_2^{1/2} ||f'||_2^{1/2}; that form is
    // not scale-invariant, so only its ratio is recorded.
    const double printed_right = std::sqrt(l2) * std::sqrt(dl2);
    if (printed_right > 0.0) r.printed_form_ratio = sup * sup / printed_right;
    return r;
}

InequalityReport check_sobolev_1d(const GraphFunction& f) {
    require_zero_boundary(f, "sobolev1d");
    return make_report(InequalityForm::sobolev_1d, std::nullopt, sup_norm(f), derivative_l1(f), 0.5);
}

InequalityReport check_sobolev_2d(const GraphFunction& f) {
    require_dimension(f, 2, "sobolev2d");
    require_zero_boundary(f, "sobolev2d");
    return make_report(InequalityForm::sobolev_2d, std::nullopt, l2_from_lp(f), derivative_l1(f),
                       std::nullopt);
}

InequalityReport check_sobolev_3d(const GraphFunction& f) {
    require_dimension(f, 3, "sobolev3d");
    require_zero_boundary(f, "sobolev3d");
    const double left = lp_norm_pow(f, 1.5);
    const double right = std::pow(derivative_l1(f), 1.5);
    return make_report(InequalityForm::sobolev_3d, std::nullopt, left, right,
                       12.0 * f.mesh().grid().spec.edge_length);
}

InequalityReport check_gn_3d(const GraphFunction& f, double p) {
    if (p < 2.0 || p > 6.0) throw std::invalid_argument("gn3d requires p in [2, 6]");
    require_dimension(f, 3, "gn3d");
    require_zero_boundary(f, "gn3d");
    const double left = lp_norm_pow(f, p);
    const double l2 = l2_from_lp(f);
    const double dl2 = std::sqrt(derivative_l2_sq(f));
    const double right = std::pow(l2, 3.0 - 0.5 * p) * std::pow(dl2, 1.5 * p - 3.0);
    return make_report(InequalityForm::gn_3d, p, left, right,
                       provable_bound(InequalityForm::gn_3d, p, f.mesh().grid().spec.edge_length));
}

InequalityReport check_gn_critical(const GraphFunction& f, double p) {
    if (p < 10.0 / 3.0 - 1e-9 || p > 6.0)
        throw std::invalid_argument("gncrit requires p in [10/3, 6]");
    require_dimension(f, 3, "gncrit");
    require_zero_boundary(f, "gncrit");
    const double left = lp_norm_pow(f, p);
    const double l2 = l2_from_lp(f);
    const double dl2sq = derivative_l2_sq(f);
    const double right = std::pow(l2, p - 2.0) * dl2sq;
    return make_report(
        InequalityForm::gn_critical, p, left, right,
        provable_bound(InequalityForm::gn_critical, p, f.mesh().grid().spec.edge_length));
}

InequalityReport check_holder_interp(const GraphFunction& f, double p) {
    if (!(p > 2.0) || !(p < 6.0)) throw std::invalid_argument("holder requires p in (2, 6)");
    const double t = (6.0 - p) / 4.0;
    const double left = lp_norm_pow(f, p);
    const double l2 = l2_from_lp(f);
    const double l6 = std::pow(lp_norm_pow(f, 6.0), 1.0 / 6.0);
    const double right = std::pow(l2, 2.0 * t) * std::pow(l6, 6.0 * (1.0 - t));
    return make_report(InequalityForm::holder_interp, p, left, right, 1.0);
}

InequalityReport check_form(const GraphFunction& f, InequalityForm form, std::optional<double> p) {
    if (form_takes_power(form) && !p)
        throw std::invalid_argument(std::string("form ") + to_string(form) + " requires a power p");
    switch (form) {
        case InequalityForm::gn_1d: return check_gn_1d(f, *p);
        case InequalityForm::gn_infty: return check_gn_infty(f);
        case InequalityForm::sobolev_1d: return check_sobolev_1d(f);
        case InequalityForm::sobolev_2d: return check_sobolev_2d(f);
        case InequalityForm::sobolev_3d: return check_sobolev_3d(f);
        case InequalityForm::gn_3d: return check_gn_3d(f, *p);
        case InequalityForm::gn_critical: return check_gn_critical(f, *p);
        case InequalityForm::holder_interp: return check_holder_interp(f, *p);
    }
    throw std::logic_error("unreachable");
}

PathEstimateReport check_path_estimate(const GraphFunction& f,
                                       const std::vector<std::size_t>& sample_nodes) {
    require_dimension(f, 3, "path estimate");
    require_zero_boundary(f, "path estimate");
    const Mesh& m = f.mesh();
    const MetricGrid& g = m.grid();
    const std::size_t nv = static_cast<std::size_t>(g.vertex_count());
    const int n = m.samples_per_edge();

    for (std::size_t node : sample_nodes) {
        if (node < nv || node >= m.node_count())
            throw std::invalid_argument("path estimate samples must be edge-interior nodes");
        const int e = static_cast<int>((node - nv) / static_cast<std::size_t>(n - 1));
        if (g.edges[static_cast<std::size_t>(e)].axis != 0)
            throw std::invalid_argument("path estimate samples must lie on x-axis edges");
    }

    PathEstimateReport rep;
    rep.samples.resize(sample_nodes.size());
    par::parallel_for(sample_nodes.size(), [&](std::size_t s) {
        const std::size_t node = sample_nodes[s];
        const int e = static_cast<int>((node - nv) / static_cast<std::size_t>(n - 1));
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        const auto& tail = g.vertices[static_cast<std::size_t>(ed.tail)];
        const int cell_i = tail[0];

        const double ix = line_deriv_l1(f, 0, g.line_of_edge(e));
        const double icell = edge_deriv_l1(f, e);
        const double iy = line_deriv_l1(f, 1, g.line_index(1, cell_i, tail[2]));
        const double iz = line_deriv_l1(f, 2, g.line_index(2, cell_i, tail[1]));

        PathSample ps;
        ps.node = node;
        ps.value_pow = std::pow(std::abs(f[node]), 1.5);
        ps.bound = std::sqrt(ix) * (std::sqrt(iy) + std::sqrt(icell)) *
                   (std::sqrt(iz) + std::sqrt(icell));
        ps.ok = ps.value_pow <= ps.bound * (1.0 + kBoundTolerance) || ps.value_pow == 0.0;
        rep.samples[s] = ps;
    });
    for (const auto& ps : rep.samples)
        if (!ps.ok) ++rep.violations;
    return rep;
}

std::vector<std::size_t> sample_x_axis_nodes(const Mesh& mesh, std::size_t count,
                                             std::uint64_t seed) {
    if (mesh.samples_per_edge() < 2)
        throw std::invalid_argument("path sampling needs at least 2 samples per edge");
    std::vector<std::size_t> pool;
    const MetricGrid& g = mesh.grid();
    const int n = mesh.samples_per_edge();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edges[static_cast<std::size_t>(e)].axis != 0) continue;
        for (int j = 1; j < n; ++j) pool.push_back(mesh.edge_node(e, j));
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(pool[rng() % pool.size()]);
    return out;
}

namespace {

// Family parameterization for the ratio ascent. Parameters are unbounded
// reals; widths/steepnesses go through exp().
struct FamilyState {
    WitnessFamily family;
    std::vector<double> theta;
};

GraphFunction realize(const FamilyState& st, std::shared_ptr<const Mesh> mesh, double profile_p,
                      std::mt19937_64& field_rng) {
    const int d = mesh->grid().spec.dimension;
    switch (st.family) {
        case WitnessFamily::random_field: return fields::random_zero_boundary(mesh, field_rng);
        case WitnessFamily::gaussian: {
            std::array<double, 3> c{0, 0, 0};
            for (int a = 0; a < d; ++a) c[static_cast<std::size_t>(a)] = st.theta[static_cast<std::size_t>(a)];
            return fields::gaussian_bump(mesh, c, std::exp(st.theta[static_cast<std::size_t>(d)]), true);
        }
        case WitnessFamily::line_soliton:
            return fields::line_soliton(mesh, 0, std::exp(st.theta[0]), st.theta[1], profile_p, true);
        case WitnessFamily::tensor: {
            std::array<double, 3> c{0, 0, 0}, k{1, 1, 1};
            for (int a = 0; a < d; ++a) {
                c[static_cast<std::size_t>(a)] = st.theta[static_cast<std::size_t>(a)];
                k[static_cast<std::size_t>(a)] = std::exp(st.theta[static_cast<std::size_t>(d + a)]);
            }
            return fields::tensor_bump(mesh, c, k, true);
        }
    }
    throw std::logic_error("unreachable");
}

std::size_t param_count(WitnessFamily family, int d) {
    switch (family) {
        case WitnessFamily::random_field: return 0;
        case WitnessFamily::gaussian: return static_cast<std::size_t>(d) + 1;
        case WitnessFamily::line_soliton: return 2;
        case WitnessFamily::tensor: return 2 * static_cast<std::size_t>(d);
    }
    return 0;
}

}  // namespace

const char* to_string(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::random_field: return "random";
        case WitnessFamily::gaussian: return "gaussian";
        case WitnessFamily::line_soliton: return "soliton";
        case WitnessFamily::tensor: return "tensor";
    }
    return "?";
}

WitnessFamily witness_family_from_string(const std::string& name) {
    if (name == "random") return WitnessFamily::random_field;
    if (name == "gaussian") return WitnessFamily::gaussian;
    if (name == "soliton") return WitnessFamily::line_soliton;
    if (name == "tensor") return WitnessFamily::tensor;
    throw std::invalid_argument("unknown witness family '" + name + "'");
}

ConstantEstimate estimate_constant(std::shared_ptr<const Mesh> mesh, InequalityForm form, double p,
                                   WitnessFamily family, const AscentConfig& config,
                                   std::uint64_t seed) {
    if (config.multistarts < 1) throw std::invalid_argument("multistarts must be >= 1");
    const int d = mesh->grid().spec.dimension;
    const double R = mesh->grid().spec.radius * mesh->grid().spec.edge_length;
    const double profile_p = form_takes_power(form) && p > 2.0 ? p : 4.0;
    const std::optional<double> form_p =
        form_takes_power(form) ? std::optional<double>(p) : std::nullopt;
    // Validates the form/p/dimension combination up front, outside the
    // parallel region; the zero function is vacuous for every form.
    check_form(GraphFunction(mesh), form, form_p);

    struct StartResult {
        double ratio = -kInf;
        GraphFunction witness;
        int evals = 0;
    };
    std::vector<StartResult> results;
    results.reserve(static_cast<std::size_t>(config.multistarts));
    for (int i = 0; i < config.multistarts; ++i) results.push_back({-kInf, GraphFunction(mesh), 0});

    par::parallel_for(static_cast<std::size_t>(config.multistarts), [&](std::size_t start) {
        StartResult& res = results[start];
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + start * 0x2545f4914f6cdd1dULL + 1);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);

        FamilyState st{family, std::vector<double>(param_count(family, d), 0.0)};
        // Start point: centers within half the truncation radius, moderate widths.
        for (std::size_t j = 0; j < st.theta.size(); ++j) st.theta[j] = 0.5 * R * unit(rng);
        if (family == WitnessFamily::gaussian) st.theta.back() = 0.7 * unit(rng);
        if (family == WitnessFamily::line_soliton) st.theta[0] = 0.7 * unit(rng);
        if (family == WitnessFamily::tensor)
            for (int a = 0; a < d; ++a) st.theta[static_cast<std::size_t>(d + a)] = 0.7 * unit(rng);

        std::mt19937_64 field_rng(rng());
        auto evaluate = [&](const FamilyState& s, std::mt19937_64& frng) {
            GraphFunction g = realize(s, mesh, profile_p, frng);
            ++res.evals;
            const auto rep = check_form(g, form, form_p);
            const double r = rep.verdict == Verdict::vacuous ? -kInf : rep.ratio;
            return std::make_pair(r, std::move(g));
        };

        auto [best, witness] = evaluate(st, field_rng);

        // Gradient-free coordinate search on the family parameters.
        if (!st.theta.empty()) {
            double step = 0.5;
            for (int it = 0; it < config.param_iterations && step > 1e-4; ++it) {
                bool improved = false;
                for (std::size_t j = 0; j < st.theta.size(); ++j) {
                    for (double sgn : {+1.0, -1.0}) {
                        FamilyState trial = st;
                        trial.theta[j] += sgn * step;
                        std::mt19937_64 frng(field_rng);  // random family ignores params anyway
                        auto [r, g] = evaluate(trial, frng);
                        if (r > best) {
                            best = r;
                            witness = std::move(g);
                            st = trial;
                            improved = true;
                        }
                    }
                }
                if (!improved) step *= 0.5;
            }
        }

        // Greedy node-level ascent with mass renormalization between sweeps.
        if (best > -kInf && config.node_sweeps > 0) {
            double eta = 0.25;
            for (int sweep = 0; sweep < config.node_sweeps; ++sweep, eta *= 0.5) {
                const double scale = std::max(sup_norm(witness), 1e-3);
                for (std::size_t q = 0; q < witness.values().size(); ++q) {
                    if (witness.mesh().is_boundary_vertex_node(q)) continue;
                    const double old = witness[q];
                    for (double sgn : {+1.0, -1.0}) {
                        witness[q] = old + sgn * eta * scale;
                        ++res.evals;
                        const auto rep = check_form(witness, form, form_p);
                        const double r = rep.verdict == Verdict::vacuous ? -kInf : rep.ratio;
                        if (r > best) {
                            best = r;
                            break;
                        }
                        witness[q] = old;
                    }
                }
                const double m = mass(witness);
                if (m > 0.0) witness = project_mass(witness, 1.0);
            }
        }

        res.ratio = best;
        res.witness = std::move(witness);
    });

    ConstantEstimate out{-kInf, -1, {}, GraphFunction(mesh), 0};
    for (int i = 0; i < config.multistarts; ++i) {
        out.evaluations += results[static_cast<std::size_t>(i)].evals;
        if (results[static_cast<std::size_t>(i)].ratio > out.best_ratio) {
            out.best_ratio = results[static_cast<std::size_t>(i)].ratio;
            out.best_start = i;
        }
    }
    if (out.best_start < 0 || out.best_ratio == -kInf)
        throw std::runtime_error("constant estimation produced no valid evaluation");
    out.witness = std::move(results[static_cast<std::size_t>(out.best_start)].witness);
    out.report = check_form(out.witness, form, form_p);
    return out;
}

}  // namespace gridnls
