#pragma once

#include <span>
#include <utility>

#include "bgk/field.hpp"
#include "bgk/kinetic_model.hpp"

namespace bgk {

struct StepContext;

/// Moments of the Chu pair (g1, g2) at one space node. `thermal` is the
/// combination dv*sum (v - u)^2 g1 + dv*sum g2, which equals 3 R rho T.
struct ChuMoments {
    double rho = 0.0;
    double momentum = 0.0;
    double thermal = 0.0;
    double T = 0.0;

    HydroState hydro() const { return {rho, momentum / rho, T}; }
};

/// rho and rho*u from g1, then T from the centred second moment of g1 plus
/// the mass of g2, using the u of the same rows. Throws DegenerateMoments.
ChuMoments chu_moments(std::span<const double> g1, std::span<const double> g2,
                       const PhaseGrid& grid, double R = 1.0);

/// Reduced equilibrium pair M1 = Maxwellian(rho, u, T), M2 = 2 R T M1.
void chu_equilibrium(const HydroState& state, const PhaseGrid& grid, double R,
                     std::span<double> m1, std::span<double> m2);

/// Slab-symmetric three-velocity gas reduced to the pair (g1, g2).
class ChuModel final : public KineticModel {
  public:
    explicit ChuModel(double R = 1.0) : KineticModel(R) {}

    int components() const override { return 2; }
    std::string_view name() const override { return "chu"; }
    int velocity_dimension() const override { return 3; }

    HydroState hydro(std::span<const double> rows, const PhaseGrid& grid) const override;
    void equilibrium(const HydroState& state, const PhaseGrid& grid,
                     std::span<double> rows) const override;
};

/// Two-component field holding (g1, g2).
using ReducedField = PhaseField;

/// Advances a Chu pair one step with any integrator. `history` holds the
/// current field first, then older levels as the integrator requires.
ReducedField step_chu(std::span<const ReducedField> history, Integrator integrator,
                      const StepContext& ctx);

}  // namespace bgk
