#include "bgk/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgk/lattice.hpp"

namespace bgk {

Simulation::Simulation(const PhaseGrid& grid, const SchemeConfig& cfg, const KineticModel& model,
                       double dt)
    : grid_(grid), cfg_(cfg), model_(model), dt_(dt), history_(dt) {
    cfg_.validate();
    if (std::abs(cfg_.R - model.R()) > 0.0)
        throw ConfigError("scheme gas constant differs from the kinetic model's");
    if (is_lattice(cfg_.integrator))
        LatticeConstraint{lattice_stride(cfg_.integrator)}.check(grid, dt);
}

void Simulation::reset(PhaseField f0, double t0) {
    if (f0.components() != model_.components() || f0.space_nodes() != grid_.space_nodes() ||
        f0.velocity_nodes() != grid_.velocity_nodes())
        throw std::invalid_argument("initial field does not match grid and model");
    check_finite(f0);
    history_ = BdfHistory(dt_);
    history_.push(std::move(f0), t0);
    steps_ = 0;
    predictor_steps_ = 0;
    shortened_ = false;
    fallback_ = false;
}

StepContext Simulation::context(double step_dt, Interpolation kind) const {
    StepContext ctx = make_context(grid_, model_, cfg_, step_dt);
    ctx.interpolation = kind;
    ctx.step_index = steps_;
    return ctx;
}

PhaseField Simulation::one_step_method(const PhaseField& f, const StepContext& ctx) const {
    switch (cfg_.integrator) {
        case Integrator::Euler1:
        case Integrator::LatticeEuler: return step_euler1(f, ctx);
        case Integrator::RK2:
        case Integrator::BDF2:
        case Integrator::LatticeBDF2: return step_rk2(f, ctx);
        case Integrator::RK3:
        case Integrator::BDF3:
        case Integrator::LatticeBDF3: return step_rk3(f, ctx);
        case Integrator::LatticeRK2: return step_dirk(f, ButcherTableau::lattice_dirk2(), ctx);
    }
    throw std::invalid_argument("unknown integrator");
}

void Simulation::check_finite(const PhaseField& f) const {
    if (!f.all_finite())
        throw NumericalError("non-finite distribution values after step " + std::to_string(steps_));
}

void Simulation::step() {
    if (history_.size() == 0) throw std::logic_error("Simulation::step before reset");
    const bool lattice = is_lattice(cfg_.integrator);
    const Integrator integrator = cfg_.integrator;
    const bool multistep = integrator == Integrator::BDF2 || integrator == Integrator::BDF3 ||
                           integrator == Integrator::LatticeBDF2 ||
                           integrator == Integrator::LatticeBDF3;
    const int order = formal_order(integrator);

    PhaseField next;
    if (multistep && !history_.ready(order)) {
        const Interpolation kind = lattice ? lattice_fallback_interpolation : cfg_.interpolation;
        next = one_step_method(history_.level(0), context(dt_, kind));
        ++predictor_steps_;
        fallback_ = fallback_ || lattice;
    } else {
        std::vector<PhaseField> levels;
        if (multistep) {
            for (int b = 0; b < order; ++b) levels.push_back(history_.level(b));
        } else {
            levels.push_back(history_.level(0));
        }
        next = step_once(levels, integrator, context(dt_, cfg_.interpolation));
    }
    check_finite(next);
    const double t_next = history_.time(0) + dt_;
    history_.push(std::move(next), t_next);
    ++steps_;
}

void Simulation::advance_to(double t_final) {
    if (history_.size() == 0) throw std::logic_error("Simulation::advance_to before reset");
    const double remaining = t_final - time();
    if (remaining < -1e-12 * std::max(1.0, std::abs(t_final)))
        throw std::invalid_argument("advance_to: target time is in the past");
    const StepPlan plan = plan_steps(dt_, std::max(remaining, 0.0));
    for (long n = 0; n < plan.full_steps; ++n) step();
    if (plan.last_dt > 0.0) {
        const bool lattice = is_lattice(cfg_.integrator);
        const Interpolation kind = lattice ? lattice_fallback_interpolation : cfg_.interpolation;
        PhaseField next = one_step_method(history_.level(0), context(plan.last_dt, kind));
        check_finite(next);
        // The shortened step breaks the constant spacing BDF relies on.
        history_ = BdfHistory(dt_);
        history_.push(std::move(next), t_final);
        ++steps_;
        shortened_ = true;
        fallback_ = fallback_ || lattice;
    }
}

}  // namespace bgk
