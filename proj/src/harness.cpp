#include "bgk/harness.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "bgk/lattice.hpp"
#include "bgk/parallel.hpp"
#include "bgk/simulation.hpp"

namespace bgk {

RunSpec make_run_spec(const Scenario& scenario, const SchemeConfig& scheme, int nx) {
    RunSpec spec;
    spec.scenario = scenario;
    spec.scenario_source = scenario.name;
    spec.scheme = scheme;
    spec.scheme.boundary = scenario.boundary;
    spec.nx = nx;
    spec.nv = scenario.nv;
    spec.vmax = scenario.vmax;
    spec.cfl = scenario.cfl;
    spec.t_final = scenario.t_final;
    return spec;
}

PhaseGrid run_grid(const RunSpec& spec) { return spec.scenario.grid(spec.nx, spec.nv, spec.vmax); }

double run_time_step(const RunSpec& spec, const PhaseGrid& grid) {
    if (is_lattice(spec.scheme.integrator))
        return LatticeConstraint{lattice_stride(spec.scheme.integrator)}.time_step(grid);
    if (spec.dt) return TimeControl::from_dt(grid, *spec.dt, spec.t_final).dt;
    return TimeControl::from_cfl(grid, spec.cfl, spec.t_final).dt;
}

MomentProfiles moment_profiles(const PhaseField& f, const PhaseGrid& grid,
                               const KineticModel& model) {
    const int n = grid.space_nodes();
    const int nvel = grid.velocity_nodes();
    const double dv = grid.dv();
    const double dim = model.velocity_dimension();
    const double R = model.R();
    MomentProfiles p;
    p.x.resize(n);
    p.rho.resize(n);
    p.u.resize(n);
    p.T.resize(n);
    p.E.resize(n);
    for (int i = 0; i < n; ++i) {
        double m0 = 0.0, m1 = 0.0;
        for (int k = 0; k < nvel; ++k) {
            m0 += f(0, i, k);
            m1 += grid.velocity_at(k) * f(0, i, k);
        }
        const double rho = m0 * dv;
        const double u = m1 * dv / rho;
        double centred = 0.0;
        for (int k = 0; k < nvel; ++k) {
            const double w = grid.velocity_at(k) - u;
            centred += w * w * f(0, i, k);
        }
        for (int c = 1; c < f.components(); ++c)
            for (int k = 0; k < nvel; ++k) centred += f(c, i, k);
        const double T = centred * dv / (dim * R * rho);
        p.x[i] = grid.x(i);
        p.rho[i] = rho;
        p.u[i] = u;
        p.T[i] = T;
        p.E[i] = 0.5 * rho * u * u + 0.5 * dim * rho * R * T;
    }
    return p;
}

double total_mass(const std::vector<double>& rho, double dx, Boundary bc) {
    if (rho.empty()) return 0.0;
    double sum = 0.0;
    const std::size_t last = rho.size() - 1;
    for (std::size_t i = 0; i < last; ++i) sum += rho[i];
    if (bc == Boundary::Periodic) return sum * dx;
    return (sum - 0.5 * rho[0] + 0.5 * rho[last]) * dx;
}

namespace {

std::string echo(const RunSpec& spec, double dt) {
    nlohmann::ordered_json j;
    j["scenario"] = spec.scenario_source;
    j["model"] = std::string(to_string(spec.scenario.model));
    j["scheme"] = scheme_label(spec.scheme);
    j["integrator"] = std::string(to_string(spec.scheme.integrator));
    j["interp"] = std::string(to_string(spec.scheme.interpolation));
    j["bc"] = std::string(to_string(spec.scheme.boundary));
    j["eps"] = spec.scheme.eps;
    j["R"] = spec.scheme.R;
    j["weno_eps"] = spec.scheme.weno_eps;
    j["nx"] = spec.nx;
    j["nv"] = spec.nv;
    j["vmax"] = spec.vmax;
    j["cfl"] = spec.cfl;
    if (spec.dt) j["dt"] = *spec.dt;
    j["dt_used"] = dt;
    j["tfinal"] = spec.t_final;
    j["threads"] = spec.scheme.threads;
    return j.dump();
}

}  // namespace

RunSpec replay_spec(const std::string& config_echo) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(config_echo);
        const Scenario scenario = load_scenario(j.at("scenario").get<std::string>());
        SchemeConfig scheme = parse_scheme_label(j.at("scheme").get<std::string>());
        scheme.interpolation = parse_interpolation(j.at("interp").get<std::string>());
        scheme.boundary = parse_boundary(j.at("bc").get<std::string>());
        scheme.eps = j.at("eps").get<double>();
        scheme.R = j.at("R").get<double>();
        scheme.weno_eps = j.at("weno_eps").get<double>();
        scheme.threads = j.at("threads").get<int>();
        RunSpec spec = make_run_spec(scenario, scheme, j.at("nx").get<int>());
        spec.scheme = scheme;
        spec.scenario_source = j.at("scenario").get<std::string>();
        spec.nv = j.at("nv").get<int>();
        spec.vmax = j.at("vmax").get<double>();
        spec.cfl = j.at("cfl").get<double>();
        spec.t_final = j.at("tfinal").get<double>();
        if (j.contains("dt")) spec.dt = j.at("dt").get<double>();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config echo: ") + e.what());
    }
}

RunReport run(const RunSpec& spec, bool capture_failure) {
    spec.scheme.validate();
    const PhaseGrid grid = run_grid(spec);
    const auto model = make_model(spec.scenario.model, spec.scheme.R);
    const double dt = run_time_step(spec, grid);

    RunReport report;
    report.dt = dt;
    report.cfl_actual = dt * grid.vmax() / grid.dx();
    report.config_echo = echo(spec, dt);

    Simulation sim(grid, spec.scheme, *model, dt);
    sim.reset(spec.scenario.initial_field(grid, *model));
    report.initial_mass =
        total_mass(moment_profiles(sim.state(), grid, *model).rho, grid.dx(), spec.scheme.boundary);

    const auto start = std::chrono::steady_clock::now();
    try {
        sim.advance_to(spec.t_final);
    } catch (const NumericalError& e) {
        if (!capture_failure) throw;
        report.failure = e.what();
        report.numerical_failure = true;
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.steps = sim.steps_taken();
    report.interpolation_fallback = sim.used_interpolation_fallback();
    report.profiles = moment_profiles(sim.state(), grid, *model);
    report.final_mass = total_mass(report.profiles.rho, grid.dx(), spec.scheme.boundary);

    if (spec.scenario.riemann && !report.failure) {
        const auto exact =
            fluid_limit_density(spec.scenario, grid, model->gas_gamma(), spec.t_final);
        std::vector<double> delta(exact.size());
        for (std::size_t i = 0; i < exact.size(); ++i) delta[i] = report.profiles.rho[i] - exact[i];
        report.fluid_L1_rho = l1_norm(delta, grid.dx());
        report.fluid_L2_rho = l2_norm(delta, grid.dx());
    }
    return report;
}

double l1_norm(const std::vector<double>& delta, double dx) {
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < delta.size(); ++i) sum += std::abs(delta[i]);
    return dx * sum;
}

double l2_norm(const std::vector<double>& delta, double dx) {
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < delta.size(); ++i) sum += delta[i] * delta[i];
    return std::sqrt(dx * sum);
}

std::vector<double> restrict_profile(const std::vector<double>& fine, int coarse_nx) {
    const long fine_nx = static_cast<long>(fine.size()) - 1;
    if (coarse_nx < 1 || fine_nx % coarse_nx != 0)
        throw ConfigError("fine grid (" + std::to_string(fine_nx) + " cells) is not a refinement of " +
                          std::to_string(coarse_nx) + " cells");
    const long ratio = fine_nx / coarse_nx;
    std::vector<double> out(static_cast<std::size_t>(coarse_nx) + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fine[i * ratio];
    return out;
}

std::vector<double> refinement_difference(const std::vector<double>& coarse,
                                          const std::vector<double>& fine) {
    const auto restricted = restrict_profile(fine, static_cast<int>(coarse.size()) - 1);
    std::vector<double> delta(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) delta[i] = coarse[i] - restricted[i];
    return delta;
}

std::vector<double> fluid_limit_density(const Scenario& scenario, const PhaseGrid& grid,
                                        double gamma, double t) {
    const auto exact = scenario.fluid_limit(gamma);
    if (!exact) throw ConfigError("scenario '" + scenario.name + "' has no Riemann data");
    if (!(t > 0.0)) throw ConfigError("fluid-limit comparison needs t > 0");
    std::vector<double> rho(grid.space_nodes());
    for (int i = 0; i < grid.space_nodes(); ++i)
        rho[i] = exact->sample((grid.x(i) - scenario.riemann->x_split) / t).rho;
    return rho;
}

StudyOptions study_defaults(const Scenario& scenario) {
    StudyOptions o;
    o.nv = scenario.nv;
    o.vmax = scenario.vmax;
    o.cfl = scenario.cfl;
    o.t_final = scenario.t_final;
    return o;
}

namespace {

RunSpec study_spec(const Scenario& scenario, const SchemeConfig& scheme, int nx,
                   const StudyOptions& o) {
    RunSpec spec = make_run_spec(scenario, scheme, nx);
    if (o.boundary) spec.scheme.boundary = *o.boundary;
    spec.scheme.threads = o.threads;
    spec.nv = o.nv;
    spec.vmax = o.vmax;
    spec.cfl = o.cfl;
    spec.t_final = o.t_final;
    return spec;
}

std::vector<RunReport> run_all(const std::vector<RunSpec>& specs, bool parallel,
                               bool capture_failure = false) {
    std::vector<RunReport> out(specs.size());
    const int n = static_cast<int>(specs.size());
    parallel_for(n, parallel ? n : 1, [&](int begin, int end) {
        for (int r = begin; r < end; ++r) out[r] = run(specs[r], capture_failure);
    });
    return out;
}

}  // namespace

ConvergenceTable convergence_study(const Scenario& scenario, const SchemeConfig& scheme,
                                   const std::vector<int>& nx_levels,
                                   const std::vector<double>& eps_values,
                                   const StudyOptions& options) {
    if (nx_levels.size() < 3) throw ConfigError("convergence study needs at least 3 grid levels");
    for (std::size_t l = 1; l < nx_levels.size(); ++l)
        if (nx_levels[l] != 2 * nx_levels[l - 1])
            throw ConfigError("convergence levels must each double the previous nx");
    if (eps_values.empty()) throw ConfigError("convergence study needs at least one eps");
    if (scenario.smooth_until && options.t_final > *scenario.smooth_until + 1e-12)
        throw ConfigError("scenario '" + scenario.name + "' is not smooth past t = " +
                          std::to_string(*scenario.smooth_until) + "; no order claims there");

    ConvergenceTable table;
    for (double eps : eps_values) {
        SchemeConfig cfg = scheme;
        cfg.eps = eps;
        std::vector<RunSpec> specs;
        for (int nx : nx_levels) specs.push_back(study_spec(scenario, cfg, nx, options));
        const auto reports = run_all(specs, options.parallel_runs);
        double previous = std::numeric_limits<double>::quiet_NaN();
        for (std::size_t l = 0; l + 1 < reports.size(); ++l) {
            const auto& coarse = reports[l].profiles;
            const auto& fine = reports[l + 1].profiles;
            const double dx = (scenario.xN - scenario.x0) / nx_levels[l];
            ConvergenceRow row;
            row.eps = eps;
            row.nx = nx_levels[l];
            row.err_L1_rho = l1_norm(refinement_difference(coarse.rho, fine.rho), dx);
            row.err_L1_u = l1_norm(refinement_difference(coarse.u, fine.u), dx);
            row.err_L1_E = l1_norm(refinement_difference(coarse.E, fine.E), dx);
            row.order = std::log2(previous / row.err_L1_rho);
            if (l > 0 && !(row.err_L1_rho < previous)) {
                std::ostringstream msg;
                msg << "eps=" << eps << ": error did not decrease from nx=" << nx_levels[l - 1]
                    << " to nx=" << nx_levels[l];
                table.warnings.push_back(msg.str());
            }
            previous = row.err_L1_rho;
            table.rows.push_back(row);
        }
    }
    return table;
}

std::vector<double> default_cfl_grid() {
    std::vector<double> grid;
    for (int m : {4800, 2400, 960, 480, 240, 160, 120, 96, 80, 60, 48, 40, 30, 24, 20, 16, 12})
        grid.push_back(240.0 / m);
    return grid;
}

double admissible_cfl(double requested, double dx, double vmax, double t_final) {
    if (!(requested > 0.0)) throw ConfigError("CFL must be positive");
    const double steps = std::max(1.0, std::round(t_final * vmax / (requested * dx)));
    return t_final / steps * vmax / dx;
}

std::vector<CflRow> cfl_sweep(const Scenario& scenario, const SchemeConfig& scheme,
                              const std::vector<double>& cfl_values, int nx,
                              const StudyOptions& options) {
    if (is_lattice(scheme.integrator))
        throw ConfigError("CFL sweeps need an interpolated scheme; lattice schemes fix dt");
    const double dx = (scenario.xN - scenario.x0) / nx;
    std::vector<CflRow> rows;
    std::vector<RunSpec> specs;
    for (double requested : cfl_values) {
        CflRow row;
        row.cfl_requested = requested;
        row.cfl_actual = admissible_cfl(requested, dx, options.vmax, options.t_final);
        rows.push_back(row);
        const double steps = std::round(options.t_final * options.vmax / (row.cfl_actual * dx));
        RunSpec coarse = study_spec(scenario, scheme, nx, options);
        coarse.dt = options.t_final / steps;
        RunSpec fine = study_spec(scenario, scheme, 2 * nx, options);
        fine.dt = options.t_final / (2.0 * steps);
        specs.push_back(coarse);
        specs.push_back(fine);
    }
    const auto reports = run_all(specs, options.parallel_runs, true);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& coarse = reports[2 * r];
        const auto& fine = reports[2 * r + 1];
        if (coarse.failure || fine.failure) {
            rows[r].err_L2_rho = std::numeric_limits<double>::quiet_NaN();
            rows[r].failure = coarse.failure ? *coarse.failure : *fine.failure;
            continue;
        }
        rows[r].err_L2_rho =
            l2_norm(refinement_difference(coarse.profiles.rho, fine.profiles.rho), dx);
    }
    return rows;
}

SchemeConfig cost_reference_scheme() { return parse_scheme_label("BDF3W35"); }

std::vector<CostRow> cost_study(const Scenario& scenario, const std::vector<SchemeConfig>& schemes,
                                const std::vector<int>& nx_levels, double eps,
                                const StudyOptions& options) {
    if (nx_levels.empty() || schemes.empty())
        throw ConfigError("cost study needs at least one scheme and one nx");
    int nx_max = 0;
    for (int nx : nx_levels) nx_max = std::max(nx_max, nx);

    SchemeConfig ref_cfg = cost_reference_scheme();
    ref_cfg.eps = eps;
    const RunReport reference = run(study_spec(scenario, ref_cfg, 2 * nx_max, options));

    std::vector<CostRow> rows;
    for (const auto& scheme : schemes) {
        SchemeConfig cfg = scheme;
        cfg.eps = eps;
        for (int nx : nx_levels) {
            // Timed runs stay sequential so wall times are comparable.
            const RunReport rep = run(study_spec(scenario, cfg, nx, options));
            const double dx = (scenario.xN - scenario.x0) / nx;
            rows.push_back({scheme_label(cfg), nx, rep.wall_seconds,
                            l1_norm(refinement_difference(rep.profiles.rho, reference.profiles.rho),
                                    dx)});
        }
    }
    return rows;
}

}  // namespace bgk
