#pragma once

#include <span>
#include <string_view>

#include "bgk/grid.hpp"
#include "bgk/moments.hpp"

namespace bgk {

/// What the integrators need to know about a relaxation system: how many
/// distribution components it carries, how to get (rho, u, T) from the
/// velocity rows at one space node, and the equilibrium rows of a state.
///
/// Rows are laid out component-major: rows[c * (2Nv+1) + k].
class KineticModel {
  public:
    explicit KineticModel(double R) : R_(R) {}
    virtual ~KineticModel() = default;

    virtual int components() const = 0;
    virtual std::string_view name() const = 0;
    /// Velocity-space dimension N of the underlying gas (1 or 3).
    virtual int velocity_dimension() const = 0;

    virtual HydroState hydro(std::span<const double> rows, const PhaseGrid& grid) const = 0;
    virtual void equilibrium(const HydroState& state, const PhaseGrid& grid,
                             std::span<double> rows) const = 0;

    double R() const { return R_; }
    /// (N + 2) / N
    double gas_gamma() const;
    /// rho u^2 / 2 + N/2 rho R T
    double total_energy(const HydroState& state) const;

  private:
    double R_;
};

/// One space and one velocity dimension: a single distribution f.
class ClassicModel final : public KineticModel {
  public:
    explicit ClassicModel(double R = 1.0) : KineticModel(R) {}

    int components() const override { return 1; }
    std::string_view name() const override { return "classic"; }
    int velocity_dimension() const override { return 1; }

    HydroState hydro(std::span<const double> rows, const PhaseGrid& grid) const override;
    void equilibrium(const HydroState& state, const PhaseGrid& grid,
                     std::span<double> rows) const override;
};

}  // namespace bgk
