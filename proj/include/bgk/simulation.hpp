#pragma once

#include "bgk/field.hpp"
#include "bgk/grid.hpp"
#include "bgk/integrators.hpp"
#include "bgk/kinetic_model.hpp"

namespace bgk {

/// Time marching for one configured scheme.
///
/// BDF schemes take their first one or two steps with the RK predictor of
/// matching order. When t_final is not a whole number of steps the last step
/// is shortened and taken with a one-step method of matching order; lattice
/// schemes take that step (and their BDF predictor steps) with the fallback
/// interpolator.
class Simulation {
  public:
    Simulation(const PhaseGrid& grid, const SchemeConfig& cfg, const KineticModel& model, double dt);

    void reset(PhaseField f0, double t0 = 0.0);
    /// One step of size dt.
    void step();
    /// Steps until t_final, shortening the last step if needed.
    void advance_to(double t_final);

    const PhaseField& state() const { return history_.level(0); }
    double time() const { return history_.time(0); }
    double dt() const { return dt_; }
    long steps_taken() const { return steps_; }
    long predictor_steps() const { return predictor_steps_; }
    /// True once a shortened final step was taken.
    bool shortened_last_step() const { return shortened_; }
    /// True once a lattice scheme had to interpolate.
    bool used_interpolation_fallback() const { return fallback_; }

  private:
    StepContext context(double step_dt, Interpolation kind) const;
    PhaseField one_step_method(const PhaseField& f, const StepContext& ctx) const;
    void check_finite(const PhaseField& f) const;

    const PhaseGrid& grid_;
    SchemeConfig cfg_;
    const KineticModel& model_;
    double dt_;
    BdfHistory history_;
    long steps_ = 0;
    long predictor_steps_ = 0;
    bool shortened_ = false;
    bool fallback_ = false;
};

}  // namespace bgk
