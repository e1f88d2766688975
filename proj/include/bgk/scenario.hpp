#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bgk/euler_riemann.hpp"
#include "bgk/field.hpp"
#include "bgk/grid.hpp"
#include "bgk/kinetic_model.hpp"

namespace bgk {

enum class ModelKind { Classic, Chu };

std::string_view to_string(ModelKind kind);
ModelKind parse_model(std::string_view name);
std::unique_ptr<KineticModel> make_model(ModelKind kind, double R = 1.0);

/// Two constant states separated at x_split.
struct RiemannData {
    HydroState left;
    HydroState right;
    double x_split = 0.5;
};

/// A test problem: initial moments as functions of x plus grid, boundary and
/// time defaults. The initial distribution is the equilibrium of the moments.
struct Scenario {
    std::string name;
    ModelKind model = ModelKind::Classic;
    double x0 = -1.0;
    double xN = 1.0;
    Boundary boundary = Boundary::Periodic;
    int nv = 20;
    double vmax = 10.0;
    double cfl = 4.0;
    double t_final = 0.32;
    /// Latest final time at which the data stay smooth enough for order claims.
    std::optional<double> smooth_until;

    std::function<HydroState(double)> moments;
    std::optional<RiemannData> riemann;

    PhaseGrid grid(int nx) const { return PhaseGrid(x0, xN, nx, vmax, nv); }
    PhaseGrid grid(int nx, int nv_override, double vmax_override) const {
        return PhaseGrid(x0, xN, nx, vmax_override, nv_override);
    }

    /// Equilibrium field of the initial moments. For Riemann data the node
    /// on the discontinuity takes the mean of the two equilibria.
    PhaseField initial_field(const PhaseGrid& grid, const KineticModel& model) const;

    /// Exact fluid-limit solution when the scenario is a Riemann problem.
    std::optional<ExactRiemann> fluid_limit(double gamma) const;
};

/// Names of the built-in scenarios.
std::vector<std::string> scenario_names();
/// Built-in scenario by name; throws ConfigError for unknown names.
Scenario builtin_scenario(const std::string& name);
/// Scenario from a JSON file, or a built-in name.
Scenario load_scenario(const std::string& name_or_path);
/// Scenario from JSON text. Keys: base, name, model, x0, xN, bc, nv, vmax,
/// cfl, tfinal, and either uniform {rho,u,T} or riemann {left, right, x_split}.
Scenario parse_scenario_json(const std::string& text);

/// Velocity u(x) of the smooth periodic test.
double smooth_velocity(double x);

}  // namespace bgk
