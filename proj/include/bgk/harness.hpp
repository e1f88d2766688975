#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgk/field.hpp"
#include "bgk/grid.hpp"
#include "bgk/kinetic_model.hpp"
#include "bgk/scenario.hpp"

namespace bgk {

/// Everything needed to reproduce one run.
struct RunSpec {
    Scenario scenario;
    /// Built-in name or scenario file path, echoed in reports.
    std::string scenario_source;
    SchemeConfig scheme;
    int nx = 100;
    int nv = 20;
    double vmax = 10.0;
    double cfl = 4.0;
    double t_final = 0.32;
    /// Overrides the CFL-derived step. Lattice schemes ignore both and use
    /// the lattice step.
    std::optional<double> dt;
};

/// Spec with the scenario's defaults and boundary; the scheme's remaining
/// fields are kept.
RunSpec make_run_spec(const Scenario& scenario, const SchemeConfig& scheme, int nx);

PhaseGrid run_grid(const RunSpec& spec);
/// Step size the run will use.
double run_time_step(const RunSpec& spec, const PhaseGrid& grid);

/// Nodal moment profiles, i = 0..Nx.
struct MomentProfiles {
    std::vector<double> x, rho, u, T, E;
};

/// Moments of every node of f. Never throws on degenerate nodes (they give
/// non-finite values).
MomentProfiles moment_profiles(const PhaseField& f, const PhaseGrid& grid,
                               const KineticModel& model);

/// Mass over distinct nodes: periodic grids drop node Nx, others use the
/// trapezoidal rule.
double total_mass(const std::vector<double>& rho, double dx, Boundary bc);

struct RunReport {
    MomentProfiles profiles;
    double dt = 0.0;
    double cfl_actual = 0.0;
    long steps = 0;
    double wall_seconds = 0.0;
    double initial_mass = 0.0;
    double final_mass = 0.0;
    bool interpolation_fallback = false;
    /// L1 and L2 density distance to the exact fluid limit (Riemann scenarios).
    std::optional<double> fluid_L1_rho;
    std::optional<double> fluid_L2_rho;
    /// Set when the run stopped early; profiles then hold the last good state.
    std::optional<std::string> failure;
    bool numerical_failure = false;
    /// JSON echo of the spec.
    std::string config_echo;
};

/// Spec rebuilt from a report's config echo.
RunSpec replay_spec(const std::string& config_echo);

/// Marches the scenario to t_final. With capture_failure, numerical errors
/// are recorded in the report instead of thrown.
RunReport run(const RunSpec& spec, bool capture_failure = false);

/// Norms over interior nodes i = 1..Nx-1.
double l1_norm(const std::vector<double>& delta, double dx);
double l2_norm(const std::vector<double>& delta, double dx);

/// Fine profile sampled at every ratio-th node; throws unless sizes agree.
std::vector<double> restrict_profile(const std::vector<double>& fine, int coarse_nx);

/// Coarse minus restricted fine.
std::vector<double> refinement_difference(const std::vector<double>& coarse,
                                          const std::vector<double>& fine);

/// Density of the exact fluid-limit solution on the grid nodes at time t.
std::vector<double> fluid_limit_density(const Scenario& scenario, const PhaseGrid& grid,
                                        double gamma, double t);

struct StudyOptions {
    int nv = 20;
    double vmax = 10.0;
    double cfl = 4.0;
    double t_final = 0.32;
    int threads = 1;
    /// Replaces the scenario's boundary condition.
    std::optional<Boundary> boundary;
    /// Run independent simulations concurrently.
    bool parallel_runs = false;
};

StudyOptions study_defaults(const Scenario& scenario);

struct ConvergenceRow {
    double eps = 0.0;
    /// Coarse level of the pair.
    int nx = 0;
    double err_L1_rho = 0.0;
    double err_L1_u = 0.0;
    double err_L1_E = 0.0;
    /// log2 of the previous error over this one; NaN on the first pair.
    double order = 0.0;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    std::vector<std::string> warnings;
};

/// Successive-refinement errors over nx levels that each double the
/// previous, at fixed CFL, for every eps.
ConvergenceTable convergence_study(const Scenario& scenario, const SchemeConfig& scheme,
                                   const std::vector<int>& nx_levels,
                                   const std::vector<double>& eps_values,
                                   const StudyOptions& options);

struct CflRow {
    double cfl_requested = 0.0;
    double cfl_actual = 0.0;
    double err_L2_rho = 0.0;
    /// Numerical failure of either run; err_L2_rho is then NaN.
    std::optional<std::string> failure;
};

/// L2 density difference between runs at nx and 2*nx for each CFL. Each
/// CFL is moved to the nearest value giving a whole number of steps. A CFL
/// whose runs fail numerically is reported with its failure, not thrown.
std::vector<CflRow> cfl_sweep(const Scenario& scenario, const SchemeConfig& scheme,
                              const std::vector<double>& cfl_values, int nx,
                              const StudyOptions& options);

/// Default sweep from 0.05 to 20: CFL = 240/m, a whole number of steps for
/// nx = 160 cells on [-1, 1], vmax = 10 and t_final = 0.3.
std::vector<double> default_cfl_grid();

/// Admissible CFL closest to `requested`: t_final/dt is a whole number.
double admissible_cfl(double requested, double dx, double vmax, double t_final);

struct CostRow {
    std::string scheme;
    int nx = 0;
    double cpu_seconds = 0.0;
    double err_L1_rho = 0.0;
};

/// Scheme used for the cost study reference.
SchemeConfig cost_reference_scheme();

/// Wall time and L1 density error against a BDF3W35 run at twice the
/// largest nx. Lattice schemes use their own time step.
std::vector<CostRow> cost_study(const Scenario& scenario, const std::vector<SchemeConfig>& schemes,
                                const std::vector<int>& nx_levels, double eps,
                                const StudyOptions& options);

}  // namespace bgk
