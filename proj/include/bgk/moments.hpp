#pragma once

#include <optional>
#include <span>
#include <string>

#include "bgk/grid.hpp"

namespace bgk {

/// Lower bounds below which density or temperature are treated as degenerate.
inline constexpr double rho_min = 1e-14;
inline constexpr double temperature_min = 1e-14;

/// Non-positive density or temperature where a Maxwellian was requested.
/// The stepping code attaches the space node and step index.
class DegenerateMoments : public NumericalError {
  public:
    explicit DegenerateMoments(const std::string& what, std::optional<int> node = {},
                               std::optional<long> step = {});

    std::optional<int> node() const { return node_; }
    std::optional<long> step() const { return step_; }

    DegenerateMoments located(int node, long step) const;

  private:
    std::string reason_;
    std::optional<int> node_;
    std::optional<long> step_;
};

/// Primitive hydrodynamic state (rho, u, T) parameterizing a Maxwellian.
struct HydroState {
    double rho = 0.0;
    double u = 0.0;
    double T = 0.0;
};

/// Conserved discrete moments (rho, rho*u, E) of a velocity profile.
struct MacroMoments {
    double rho = 0.0;
    double momentum = 0.0;
    double energy = 0.0;

    /// Throws DegenerateMoments when rho <= rho_min.
    double velocity() const;
    /// T = (2E/rho - u^2)/R, the one-velocity-dimension energy relation.
    double temperature(double R = 1.0) const;
    HydroState hydro(double R = 1.0) const;

    friend MacroMoments operator+(const MacroMoments& a, const MacroMoments& b) {
        return {a.rho + b.rho, a.momentum + b.momentum, a.energy + b.energy};
    }
    friend MacroMoments operator*(double s, const MacroMoments& a) {
        return {s * a.rho, s * a.momentum, s * a.energy};
    }
};

/// Midpoint-rule moments (sum f dv, sum v f dv, sum v^2/2 f dv) of one
/// velocity row, accumulated in ascending velocity order.
MacroMoments discrete_moments(std::span<const double> row, const PhaseGrid& grid);

/// rho / sqrt(2 pi R T) * exp(-(v-u)^2 / (2 R T)).
double maxwellian(const HydroState& state, double v, double R = 1.0);

/// Maxwellian of the given conserved moments at velocity v.
double maxwellian_eval(const MacroMoments& mom, double v, double R = 1.0);

/// Samples the Maxwellian on every velocity node of the grid.
void maxwellian_row(const HydroState& state, const PhaseGrid& grid, double R,
                    std::span<double> out);

/// Implicit relaxation update (foot + tau*M)/(1 + tau) with tau = a*dt/eps.
/// Finite for tau = +inf (returns M).
inline double relaxation_solve(double foot, double equilibrium, double tau) {
    if (tau == 0.0) return foot;
    if (tau > 1e300) return equilibrium;
    return (foot + tau * equilibrium) / (1.0 + tau);
}

}  // namespace bgk
