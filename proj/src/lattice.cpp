#include "bgk/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bgk/integrators.hpp"

namespace bgk {

double LatticeConstraint::time_step(const PhaseGrid& grid) const {
    if (stride < 1) throw ConfigError("lattice stride must be a positive integer");
    return stride * grid.dx() / grid.dv();
}

double LatticeConstraint::cfl(const PhaseGrid& grid) const {
    return static_cast<double>(stride) * grid.nv();
}

void LatticeConstraint::check(const PhaseGrid& grid, double dt) const {
    if (stride < 1) throw ConfigError("lattice stride must be a positive integer");
    const double lhs = grid.dv() * dt;
    const double rhs = stride * grid.dx();
    if (std::abs(lhs - rhs) > 1e-12 * rhs)
        throw ConfigError("lattice constraint dv*dt = " + std::to_string(stride) +
                          "*dx violated (dv*dt = " + std::to_string(lhs) +
                          ", s*dx = " + std::to_string(rhs) + ")");
}

namespace {

void require_lattice(const StepContext& ctx, int stride) {
    if (ctx.interpolation != Interpolation::None)
        throw ConfigError("lattice schemes run with interpolation = none");
    LatticeConstraint{stride}.check(ctx.grid, ctx.dt);
}

}  // namespace

PhaseField step_lattice(std::span<const PhaseField> history, Integrator scheme,
                        const StepContext& ctx) {
    require_lattice(ctx, 1);
    auto need = [&](std::size_t levels) {
        if (history.size() < levels)
            throw std::logic_error(std::string(to_string(scheme)) + " needs " +
                                   std::to_string(levels) + " history levels");
    };
    switch (scheme) {
        case Integrator::LatticeEuler: need(1); return step_euler1(history[0], ctx);
        case Integrator::LatticeBDF2: need(2); return step_bdf2(history[0], history[1], ctx);
        case Integrator::LatticeBDF3:
            need(3);
            return step_bdf3(history[0], history[1], history[2], ctx);
        default: break;
    }
    throw std::invalid_argument("step_lattice handles LatEuler, LatBDF2 and LatBDF3");
}

PhaseField step_lattice_rk2(const PhaseField& f, const StepContext& ctx) {
    require_lattice(ctx, 3);
    static const ButcherTableau tab = ButcherTableau::lattice_dirk2();
    return step_dirk(f, tab, ctx);
}

}  // namespace bgk
