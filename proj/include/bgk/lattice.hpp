#pragma once

#include <span>

#include "bgk/field.hpp"
#include "bgk/grid.hpp"

namespace bgk {

struct StepContext;

/// dv * dt = stride * dx, so every characteristic foot (and, for the
/// lattice DIRK, every stage point) is a grid node.
struct LatticeConstraint {
    int stride = 1;

    /// The only admissible time step, stride * dx / dv.
    double time_step(const PhaseGrid& grid) const;
    /// Effective CFL number, stride * Nv.
    double cfl(const PhaseGrid& grid) const;
    /// Throws ConfigError unless dv*dt = stride*dx to relative 1e-12.
    void check(const PhaseGrid& grid, double dt) const;
};

/// Interpolator used where a lattice scheme must leave the lattice: its BDF
/// predictor steps and a shortened final step.
inline constexpr Interpolation lattice_fallback_interpolation = Interpolation::WENO35;

/// Interpolation-free implicit Euler, BDF2 or BDF3 with stride 1. `history`
/// holds the current level first. Feet are fetched by index shift through the
/// boundary mapping.
PhaseField step_lattice(std::span<const PhaseField> history, Integrator scheme,
                        const StepContext& ctx);

/// Interpolation-free second-order DIRK with stride 3.
PhaseField step_lattice_rk2(const PhaseField& f, const StepContext& ctx);

}  // namespace bgk
