#include "gridnls/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridnls/fields.hpp"
#include "gridnls/io.hpp"
#include "gridnls/parallel.hpp"

namespace gridnls::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

// Every constraint violation is collected before reporting, so one pass
// over the message fixes the whole command line.
void validate_config(const RunConfig& c) {
    std::vector<std::string> problems;
    auto expect = [&](bool ok, const std::string& msg) {
        if (!ok) problems.push_back(msg);
    };

    try {
        c.grid.validate();
    } catch (const std::exception& e) {
        problems.push_back(e.what());
    }
    expect(c.samples_per_edge >= 1, "n (samples per edge) must be >= 1");
    expect(c.format == "json" || c.format == "csv", "format must be json or csv");

    if (c.subcommand == "check-inequalities" || c.subcommand == "estimate-constants") {
        expect(!c.forms.empty(), "at least one inequality form is required");
        for (const auto form : c.forms) {
            if ((form == InequalityForm::sobolev_3d || form == InequalityForm::gn_3d ||
                 form == InequalityForm::gn_critical) &&
                c.grid.dimension != 3)
                problems.push_back(std::string("form ") + to_string(form) +
                                   " requires --dim 3");
            if (form == InequalityForm::sobolev_2d && c.grid.dimension != 2)
                problems.push_back("form sobolev2d requires --dim 2");
            if (!form_takes_power(form)) continue;
            if (c.powers.empty()) {
                problems.push_back(std::string("form ") + to_string(form) +
                                   " requires at least one --p");
                continue;
            }
            for (double p : c.powers) {
                const bool ok =
                    (form == InequalityForm::gn_1d && p >= 2.0) ||
                    (form == InequalityForm::gn_3d && p >= 2.0 && p <= 6.0) ||
                    (form == InequalityForm::gn_critical && p >= 10.0 / 3.0 - 1e-9 && p <= 6.0) ||
                    (form == InequalityForm::holder_interp && p > 2.0 && p < 6.0);
                if (!ok)
                    problems.push_back("p=" + std::to_string(p) + " is outside the range of form " +
                                       to_string(form));
            }
        }
        expect(c.field_count >= 1, "count must be >= 1");
        expect(c.path_samples >= 0, "path-samples must be >= 0");
        if (c.path_samples > 0) {
            expect(c.grid.dimension == 3, "path checks require --dim 3");
            expect(c.samples_per_edge >= 2, "path checks require --n >= 2");
        }
    }

    if (c.subcommand == "ground-state" || c.subcommand == "phase-diagram") {
        try {
            c.solver.validate();
        } catch (const std::exception& e) {
            problems.push_back(e.what());
        }
        expect(c.init_kind == "auto" || c.init_kind == "gaussian" || c.init_kind == "random" ||
                   c.init_kind == "file",
               "init must be one of auto|gaussian|random|file");
        expect(c.init_kind != "file" || !c.init_file.empty(), "--init file requires --init-file");
    }
    if (c.subcommand == "ground-state" && c.critical_mass) {
        expect(c.mu_lo > 0.0 && c.mu_hi > c.mu_lo, "need 0 < mu-lo < mu-hi");
        expect(c.tol_mu > 0.0, "tol-mu must be positive");
        expect(c.solver.p >= 10.0 / 3.0 - 1e-9 && c.solver.p <= 6.0,
               "critical-mass estimation requires p in [10/3, 6]");
    }
    if (c.subcommand == "phase-diagram") {
        expect(!c.p_list.empty(), "phase-diagram requires a non-empty --p-list");
        expect(!c.mu_list.empty(), "phase-diagram requires a non-empty --mu-list");
        for (double p : c.p_list)
            expect(p > 2.0, "--p-list entries must exceed 2 (got " + std::to_string(p) + ")");
        for (double mu : c.mu_list)
            expect(mu > 0.0, "--mu-list entries must be positive");
    }
    if (c.subcommand == "probe") {
        expect(c.probe_kind == "concentration" || c.probe_kind == "spreading",
               "probe kind must be concentration or spreading");
        expect(c.solver.p > 2.0, "p must exceed 2");
        expect(c.solver.mass_target > 0.0, "mu must be positive");
        expect(c.schedule_count >= 2, "schedule-count must be >= 2");
        expect(c.schedule_min > 0.0, "schedule-min must be positive");
        if (c.probe_kind == "spreading") expect(c.grid.dimension == 3, "spreading requires --dim 3");
    }
    if (c.subcommand == "build-grid")
        expect(c.format == "json", "build-grid supports only json output");

    if (!problems.empty()) {
        std::ostringstream oss;
        oss << "invalid configuration:";
        for (const auto& p : problems) oss << "\n  - " << p;
        throw std::invalid_argument(oss.str());
    }
}

json make_envelope(const RunConfig& c) {
    json j{{"schema_version", io::kSchemaVersion},
           {"command", c.subcommand},
           {"seed", c.seed},
           {"grid", io::spec_to_json(c.grid)},
           {"samples_per_edge", c.samples_per_edge}};
    if (!c.no_timestamp) j["generated_at"] = iso_timestamp();
    return j;
}

// Writes the payload (atomically when a path is given) and prints the
// one-line summary.
void emit(const RunConfig& c, const std::string& payload, const std::string& summary) {
    if (c.out_path.empty()) {
        std::cout << payload << '\n';
    } else {
        io::atomic_write(c.out_path, payload);
    }
    std::cerr << summary << '\n';
}

std::shared_ptr<const Mesh> make_mesh(const RunConfig& c) {
    auto grid = std::make_shared<MetricGrid>(build_grid(c.grid));
    return std::make_shared<Mesh>(grid, c.samples_per_edge);
}

int run_build_grid(const RunConfig& c) {
    const MetricGrid grid = build_grid(c.grid);
    json doc = io::grid_to_json(grid);
    if (!c.no_timestamp) doc["generated_at"] = iso_timestamp();
    emit(c, doc.dump(2),
         "build-grid: " + std::to_string(grid.vertex_count()) + " vertices, " +
             std::to_string(grid.edge_count()) + " edges");
    return 0;
}

int run_check(const RunConfig& c) {
    auto mesh = make_mesh(c);
    std::vector<std::pair<InequalityForm, std::optional<double>>> checks;
    for (const auto form : c.forms) {
        if (form_takes_power(form)) {
            for (double p : c.powers) {
                const bool applies =
                    (form == InequalityForm::gn_1d && p >= 2.0) ||
                    (form == InequalityForm::gn_3d && p >= 2.0 && p <= 6.0) ||
                    (form == InequalityForm::gn_critical && p >= 10.0 / 3.0 - 1e-9 && p <= 6.0) ||
                    (form == InequalityForm::holder_interp && p > 2.0 && p < 6.0);
                if (applies) checks.emplace_back(form, p);
            }
        } else {
            checks.emplace_back(form, std::nullopt);
        }
    }

    const std::size_t n_fields = static_cast<std::size_t>(c.field_count);
    std::vector<std::vector<InequalityReport>> rows(n_fields);
    par::parallel_for(n_fields, [&](std::size_t i) {
        std::mt19937_64 rng(c.seed * 0x9e3779b97f4a7c15ULL + i + 1);
        const GraphFunction f = fields::random_zero_boundary(mesh, rng);
        auto& out = rows[i];
        out.reserve(checks.size());
        for (const auto& [form, p] : checks) out.push_back(check_form(f, form, p));
    });

    std::vector<InequalityReport> reports;
    json results = json::array();
    std::size_t violations = 0;
    for (std::size_t i = 0; i < n_fields; ++i) {
        for (const auto& r : rows[i]) {
            if (r.verdict == Verdict::violated) ++violations;
            json jr = io::report_to_json(r);
            jr["field_index"] = i;
            results.push_back(std::move(jr));
            reports.push_back(r);
        }
    }

    if (c.inject_violation) {
        InequalityReport fake;
        fake.form = InequalityForm::sobolev_3d;
        fake.left = 1.0;
        fake.right = 1e-3;
        fake.ratio = 1e3;
        fake.provable_bound = 12.0;
        fake.verdict = Verdict::violated;
        json jr = io::report_to_json(fake);
        jr["field_index"] = -1;
        results.push_back(std::move(jr));
        reports.push_back(fake);
        ++violations;
    }

    json path_summary;
    if (c.path_samples > 0) {
        std::size_t path_violations = 0, path_checked = 0;
        for (std::size_t i = 0; i < n_fields; ++i) {
            std::mt19937_64 rng(c.seed * 0x9e3779b97f4a7c15ULL + i + 1);
            const GraphFunction f = fields::random_zero_boundary(mesh, rng);
            const auto nodes = sample_x_axis_nodes(*mesh, static_cast<std::size_t>(c.path_samples),
                                                   c.seed + 31 * i);
            const auto rep = check_path_estimate(f, nodes);
            path_checked += rep.samples.size();
            path_violations += rep.violations;
        }
        path_summary = {{"samples", path_checked}, {"violations", path_violations}};
        violations += path_violations;
    }

    std::string payload;
    if (c.format == "csv") {
        payload = io::reports_to_csv(reports);
    } else {
        json doc = make_envelope(c);
        doc["results"] = std::move(results);
        doc["violations"] = violations;
        if (!path_summary.is_null()) doc["path_estimate"] = path_summary;
        payload = doc.dump(2);
    }
    emit(c, payload,
         "check-inequalities: " + std::to_string(reports.size()) + " checks on " +
             std::to_string(n_fields) + " fields, " + std::to_string(violations) + " violation(s)");
    return violations == 0 ? 0 : 1;
}

int run_estimate(const RunConfig& c) {
    auto mesh = make_mesh(c);
    json results = json::array();
    bool soundness_violation = false;
    for (const auto form : c.forms) {
        std::vector<std::optional<double>> ps;
        if (form_takes_power(form))
            for (double p : c.powers) ps.emplace_back(p);
        else
            ps.emplace_back(std::nullopt);
        for (const auto& p : ps) {
            const auto est = estimate_constant(mesh, form, p.value_or(0.0), c.family, c.ascent,
                                               c.seed);
            json row{{"form", to_string(form)},
                     {"family", to_string(c.family)},
                     {"best_ratio", est.best_ratio},
                     {"best_start", est.best_start},
                     {"evaluations", est.evaluations},
                     {"report", io::report_to_json(est.report)}};
            row["p"] = p ? json(*p) : json(nullptr);
            const auto bound = provable_bound(form, p.value_or(0.0), c.grid.edge_length);
            row["provable_bound"] = bound ? json(*bound) : json(nullptr);
            if (bound && est.best_ratio > *bound * (1.0 + kBoundTolerance))
                soundness_violation = true;
            if (c.include_witness) row["witness"] = io::function_to_json(est.witness);
            results.push_back(std::move(row));
        }
    }
    json doc = make_envelope(c);
    doc["results"] = std::move(results);
    emit(c, doc.dump(2),
         "estimate-constants: " + std::to_string(results.size()) + " estimates" +
             (soundness_violation ? ", SOUNDNESS VIOLATION" : ""));
    return soundness_violation ? 1 : 0;
}

bool solver_anomaly(const GroundStateResult& r) {
    return r.any_blow_up || !r.run.energy_monotone || r.run.max_mass_drift > 1e-10 ||
           r.small_mass_bound_violated;
}

int run_ground_state(const RunConfig& c) {
    auto mesh = make_mesh(c);
    SolverConfig cfg = c.solver;
    if (c.init_kind == "gaussian") cfg.start_pool = StartPool::gaussian;
    if (c.init_kind == "random") cfg.start_pool = StartPool::random;
    if (c.init_kind == "file") {
        std::ifstream in(c.init_file);
        if (!in) throw std::runtime_error("cannot open init file " + c.init_file);
        json j;
        in >> j;
        GraphFunction f = io::function_from_json(j);
        if (f.values().size() != mesh->node_count())
            throw std::runtime_error("init function does not match the requested grid/mesh");
        GraphFunction g(mesh);
        g.values() = f.values();
        cfg.initial = std::move(g);
    }

    if (c.critical_mass) {
        const auto res = estimate_critical_mass(mesh, cfg.p, c.mu_lo, c.mu_hi, c.tol_mu, cfg);
        json doc = make_envelope(c);
        doc["result"] = io::critical_mass_to_json(res);
        emit(c, doc.dump(2),
             "critical-mass: mu_" + std::to_string(cfg.p) + " ~ " + std::to_string(res.mu_estimate) +
                 " (" + std::to_string(res.anomalies.size()) + " anomalies)");
        return res.anomalies.empty() ? 0 : 1;
    }

    const auto res = minimize(mesh, cfg);
    json doc = make_envelope(c);
    doc["result"] = io::ground_state_to_json(res);
    emit(c, doc.dump(2),
         "ground-state: E = " + std::to_string(res.breakdown.energy) +
             (res.run.converged ? " (converged)" : " (not converged)"));
    if (!c.minimizer_out.empty())
        io::atomic_write(c.minimizer_out, io::function_to_json(res.minimizer).dump(2));
    return solver_anomaly(res) ? 1 : 0;
}

int run_phase_diagram(const RunConfig& c) {
    auto mesh = make_mesh(c);
    const auto cells = phase_diagram(mesh, c.p_list, c.mu_list, c.solver, c.threshold);
    bool anomaly = false;
    json rows = json::array();
    for (const auto& cell : cells) {
        rows.push_back(io::phase_point_to_json(cell));
        if (!cell.error.empty()) anomaly = true;
    }
    std::string payload;
    if (c.format == "csv") {
        payload = io::phase_points_to_csv(cells);
    } else {
        json doc = make_envelope(c);
        doc["results"] = std::move(rows);
        payload = doc.dump(2);
    }
    emit(c, payload,
         "phase-diagram: " + std::to_string(cells.size()) + " cells" +
             (anomaly ? ", with cell errors" : ""));
    return anomaly ? 1 : 0;
}

int run_probe(const RunConfig& c) {
    auto mesh = make_mesh(c);
    double hi = c.schedule_max;
    if (hi <= 0.0)
        hi = c.probe_kind == "concentration"
                 ? 0.5 / mesh->step()
                 : c.grid.radius * c.grid.edge_length;
    std::vector<double> schedule;
    for (int i = 0; i < c.schedule_count; ++i) {
        const double t = static_cast<double>(i) / (c.schedule_count - 1);
        schedule.push_back(c.linear_schedule ? c.schedule_min + t * (hi - c.schedule_min)
                                             : c.schedule_min * std::pow(hi / c.schedule_min, t));
    }
    const auto res = c.probe_kind == "concentration"
                         ? concentration_probe(mesh, c.solver.p, c.solver.mass_target, schedule,
                                               c.threshold)
                         : spreading_probe(mesh, c.solver.p, c.solver.mass_target, schedule);
    std::string payload;
    if (c.format == "csv") {
        payload = io::probe_to_csv(res);
    } else {
        json doc = make_envelope(c);
        doc["result"] = io::probe_to_json(res);
        payload = doc.dump(2);
    }
    emit(c, payload,
         "probe(" + c.probe_kind + "): min E = " + std::to_string(res.min_energy) +
             (res.unbounded_suspected ? ", unbounded-below suspected" : ""));
    return 0;
}

void add_common_options(CLI::App* cmd, RunConfig& c, std::string& boundary, std::string& forms_csv) {
    cmd->add_option("--dim", c.grid.dimension, "grid dimension (1, 2, or 3)")
        ->capture_default_str();
    cmd->add_option("--radius", c.grid.radius, "truncation radius in lattice units")
        ->capture_default_str();
    cmd->add_option("--ell", c.grid.edge_length, "edge length")->capture_default_str();
    cmd->add_option("--boundary", boundary, "dirichlet | neumann")->capture_default_str();
    cmd->add_option("--n", c.samples_per_edge, "interior intervals per edge")
        ->capture_default_str();
    cmd->add_option("--seed", c.seed, "RNG seed (falls back to GRIDNLS_SEED)");
    cmd->add_option("--out", c.out_path, "output path (default: stdout)");
    cmd->add_option("--format", c.format, "json | csv")->capture_default_str();
    cmd->add_flag("--no-timestamp", c.no_timestamp, "omit generated_at from the output");
    (void)forms_csv;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig c;
    std::string boundary = "neumann";
    std::string forms_csv;
    std::string family = "gaussian";

    CLI::App app{"Variational toolkit for the focusing NLS on truncated grid graphs"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a config file (flags override)");
    app.allow_config_extras(false);

    auto* build = app.add_subcommand("build-grid", "construct a grid and write it as JSON");
    add_common_options(build, c, boundary, forms_csv);

    auto* check = app.add_subcommand("check-inequalities",
                                     "verify inequalities on random zero-boundary fields");
    add_common_options(check, c, boundary, forms_csv);
    check->add_option("--forms", forms_csv, "comma-separated forms (see --help-forms)");
    check->add_option("--p", c.powers, "powers to check (repeatable)");
    check->add_option("--count", c.field_count, "number of random fields")->capture_default_str();
    check->add_option("--path-samples", c.path_samples,
                      "per-field sample count for the pointwise path estimate (0 = off)");
    check->add_flag("--inject-violation", c.inject_violation, "append a fabricated violation")
        ->group("");

    auto* est = app.add_subcommand("estimate-constants",
                                   "empirical lower bounds for optimal constants");
    add_common_options(est, c, boundary, forms_csv);
    est->add_option("--forms", forms_csv, "comma-separated forms");
    est->add_option("--p", c.powers, "powers (repeatable)");
    est->add_option("--family", family, "random | gaussian | soliton | tensor")
        ->capture_default_str();
    est->add_option("--multistarts", c.ascent.multistarts, "ascent multistarts")
        ->capture_default_str();
    est->add_option("--param-iters", c.ascent.param_iterations, "coordinate-search iterations")
        ->capture_default_str();
    est->add_option("--node-sweeps", c.ascent.node_sweeps, "node-level ascent sweeps")
        ->capture_default_str();
    est->add_flag("--include-witness", c.include_witness, "embed witness functions in the output");

    auto* gs = app.add_subcommand("ground-state", "mass-constrained energy minimization");
    add_common_options(gs, c, boundary, forms_csv);
    gs->add_option("--p", c.solver.p, "nonlinearity power (> 2)");
    gs->add_option("--mu", c.solver.mass_target, "constraint mass");
    gs->add_option("--tau0", c.solver.tau0, "initial step size")->capture_default_str();
    gs->add_option("--backtrack", c.solver.backtrack, "backtracking factor")
        ->capture_default_str();
    gs->add_option("--max-iters", c.solver.max_iterations, "iteration cap")->capture_default_str();
    gs->add_option("--energy-tol", c.solver.energy_tol, "energy tolerance")->capture_default_str();
    gs->add_option("--grad-tol", c.solver.grad_tol, "projected-gradient tolerance")
        ->capture_default_str();
    gs->add_option("--multistarts", c.solver.multistarts, "number of starts")
        ->capture_default_str();
    gs->add_option("--init", c.init_kind, "auto | gaussian | random | file")
        ->capture_default_str();
    gs->add_option("--init-file", c.init_file, "graph-function JSON for --init file");
    gs->add_option("--minimizer-out", c.minimizer_out, "write the minimizer as JSON");
    gs->add_flag("--critical-mass", c.critical_mass, "bisect the critical mass instead");
    gs->add_option("--mu-lo", c.mu_lo, "bisection bracket low end")->capture_default_str();
    gs->add_option("--mu-hi", c.mu_hi, "bisection bracket high end")->capture_default_str();
    gs->add_option("--tol-mu", c.tol_mu, "bisection width tolerance")->capture_default_str();

    auto* phase = app.add_subcommand("phase-diagram", "classify a (p, mu) sweep");
    add_common_options(phase, c, boundary, forms_csv);
    phase->add_option("--p-list", c.p_list, "powers (repeatable)");
    phase->add_option("--mu-list", c.mu_list, "masses (repeatable)");
    phase->add_option("--multistarts", c.solver.multistarts, "starts per cell")
        ->capture_default_str();
    phase->add_option("--max-iters", c.solver.max_iterations, "iteration cap per start")
        ->capture_default_str();
    phase->add_option("--energy-tol", c.solver.energy_tol, "energy tolerance")
        ->capture_default_str();
    phase->add_option("--grad-tol", c.solver.grad_tol, "projected-gradient tolerance")
        ->capture_default_str();
    phase->add_option("--threshold", c.threshold, "unboundedness energy threshold")
        ->capture_default_str();

    auto* probe = app.add_subcommand("probe", "concentration / spreading energy trends");
    add_common_options(probe, c, boundary, forms_csv);
    probe->add_option("--kind", c.probe_kind, "concentration | spreading")->capture_default_str();
    probe->add_option("--p", c.solver.p, "nonlinearity power (> 2)");
    probe->add_option("--mu", c.solver.mass_target, "constraint mass");
    probe->add_option("--schedule-min", c.schedule_min, "first schedule value")
        ->capture_default_str();
    probe->add_option("--schedule-max", c.schedule_max,
                      "last schedule value (0: derived from the mesh)");
    probe->add_option("--schedule-count", c.schedule_count, "schedule length")
        ->capture_default_str();
    probe->add_flag("--linear", c.linear_schedule, "linear instead of geometric schedule");
    probe->add_option("--threshold", c.threshold, "unboundedness energy threshold")
        ->capture_default_str();

    // CLI11 wants mutable argv; parse from a rebuilt vector.
    std::vector<std::string> argv_store = args;
    std::vector<char*> argv;
    argv.reserve(argv_store.size());
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help() << std::endl;
        throw;
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(std::string("usage error: ") + e.what());
    }

    for (auto* sub : {build, check, est, gs, phase, probe})
        if (sub->parsed()) c.subcommand = sub->get_name();

    c.grid.boundary = boundary_from_string(boundary);
    c.family = witness_family_from_string(family);
    for (const auto& name : split_csv(forms_csv))
        c.forms.push_back(inequality_form_from_string(name));
    if (c.forms.empty() && (c.subcommand == "check-inequalities")) {
        // Default: every form applicable to the grid dimension.
        c.forms = {InequalityForm::sobolev_1d, InequalityForm::gn_1d, InequalityForm::gn_infty,
                   InequalityForm::holder_interp};
        if (c.grid.dimension == 2) c.forms.push_back(InequalityForm::sobolev_2d);
        if (c.grid.dimension == 3) {
            c.forms.push_back(InequalityForm::sobolev_3d);
            c.forms.push_back(InequalityForm::gn_3d);
            c.forms.push_back(InequalityForm::gn_critical);
        }
        if (c.powers.empty()) c.powers = {4.0};
    }

    // Seed fallback: GRIDNLS_SEED.
    bool seed_given = false;
    for (const auto& a : args)
        if (a.rfind("--seed", 0) == 0) seed_given = true;
    if (!seed_given) {
        if (const char* env = std::getenv("GRIDNLS_SEED")) c.seed = std::strtoull(env, nullptr, 10);
    }
    c.solver.seed = c.seed;

    validate_config(c);
    return c;
}

int run(const RunConfig& c) {
    try {
        if (c.subcommand == "build-grid") return run_build_grid(c);
        if (c.subcommand == "check-inequalities") return run_check(c);
        if (c.subcommand == "estimate-constants") return run_estimate(c);
        if (c.subcommand == "ground-state") return run_ground_state(c);
        if (c.subcommand == "phase-diagram") return run_phase_diagram(c);
        if (c.subcommand == "probe") return run_probe(c);
        std::cerr << "unknown subcommand " << c.subcommand << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args(argv, argv + argc);
    try {
        const RunConfig c = parse_config(args);
        return run(c);
    } catch (const CLI::CallForHelp&) {
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}

}  // namespace gridnls::cli
