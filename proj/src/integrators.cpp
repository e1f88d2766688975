#include "bgk/integrators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bgk/boundaries.hpp"
#include "bgk/lattice.hpp"
#include "bgk/parallel.hpp"
#include "bgk/weno.hpp"

namespace bgk {

// ---------------------------------------------------------------------------
// Tableaus

bool ButcherTableau::stiffly_accurate() const {
    const auto& last = a.back();
    for (int k = 0; k < stages(); ++k)
        if (last[k] != b[k]) return false;
    return true;
}

double ButcherTableau::row_sum_defect() const {
    double defect = 0.0;
    for (int l = 0; l < stages(); ++l) {
        double sum = 0.0;
        for (double x : a[l]) sum += x;
        defect = std::max(defect, std::abs(sum - c[l]));
    }
    return defect;
}

double dirk2_alpha() { return 1.0 - std::sqrt(2.0) / 2.0; }

double dirk3_gamma() {
    // Newton on 6x^3 - 18x^2 + 9x - 1 from the tabulated value of the middle root.
    double x = 0.4358665215;
    for (int it = 0; it < 8; ++it) {
        const double p = ((6.0 * x - 18.0) * x + 9.0) * x - 1.0;
        const double dp = (18.0 * x - 36.0) * x + 9.0;
        x -= p / dp;
    }
    return x;
}

double dirk3_delta() {
    const double g = dirk3_gamma();
    return 1.5 * g * g - 5.0 * g + 1.25;
}

ButcherTableau ButcherTableau::dirk2() {
    const double a = dirk2_alpha();
    return {{{a, 0.0}, {1.0 - a, a}}, {1.0 - a, a}, {a, 1.0}};
}

ButcherTableau ButcherTableau::dirk3() {
    const double g = dirk3_gamma();
    const double d = dirk3_delta();
    return {{{g, 0.0, 0.0}, {(1.0 - g) / 2.0, g, 0.0}, {1.0 - d - g, d, g}},
            {1.0 - d - g, d, g},
            {g, (1.0 + g) / 2.0, 1.0}};
}

ButcherTableau ButcherTableau::lattice_dirk2() {
    return {{{1.0 / 3.0, 0.0}, {0.75, 0.25}}, {0.75, 0.25}, {1.0 / 3.0, 1.0}};
}

// ---------------------------------------------------------------------------
// Context

StepContext StepContext::with_dt(double new_dt) const {
    StepContext copy = *this;
    copy.dt = new_dt;
    return copy;
}

StepContext StepContext::with_interpolation(Interpolation kind) const {
    StepContext copy = *this;
    copy.interpolation = kind;
    return copy;
}

StepContext make_context(const PhaseGrid& grid, const KineticModel& model, const SchemeConfig& cfg,
                         double dt) {
    return StepContext{grid,         model,        cfg.boundary, cfg.interpolation, cfg.eps,
                       dt,           cfg.weno_eps, cfg.threads,  0};
}

// ---------------------------------------------------------------------------
// Transport and relaxation

namespace {

constexpr double nodal_snap = 1e-11;

double interpolate_cell(Interpolation kind, const double* s, double theta, double weno_eps) {
    switch (kind) {
        case Interpolation::Linear: return weno::linear_kernel(s, theta);
        case Interpolation::WENO23: return weno::weno23_kernel(s, theta, weno_eps);
        case Interpolation::WENO35: return weno::weno35_kernel(s, theta, weno_eps);
        case Interpolation::None: break;
    }
    throw ConfigError("interpolation-free transport hit an off-grid foot");
}

}  // namespace

PhaseField transport(const PhaseField& f, const StepContext& ctx, double c) {
    const PhaseGrid& grid = ctx.grid;
    if (f.space_nodes() != grid.space_nodes() || f.velocity_nodes() != grid.velocity_nodes())
        throw std::invalid_argument("transport: field does not match grid");
    if (c == 0.0) return f;

    const double scale = c * ctx.dt / grid.dx();  // shift in nodes per unit velocity
    const double max_shift = std::abs(grid.vmax() * scale);
    const int ghosts = required_ghosts(ctx.interpolation, max_shift);

    PhaseField out(f.components(), grid);
    for (int comp = 0; comp < f.components(); ++comp) {
        const GhostProfile ext = extend(f, comp, grid, ctx.boundary, ghosts);
        parallel_for(grid.velocity_nodes(), ctx.threads, [&](int kbegin, int kend) {
            for (int k = kbegin; k < kend; ++k) {
                const double shift = grid.velocity_at(k) * scale;
                const double nearest = std::round(shift);
                const auto col = ext.column(k);
                auto dst = out.column(comp, k);
                if (std::abs(shift - nearest) <= nodal_snap) {
                    const long s = static_cast<long>(nearest);
                    for (int i = 0; i < grid.space_nodes(); ++i) dst[i] = col[i - s + ghosts];
                    continue;
                }
                if (ctx.interpolation == Interpolation::None)
                    throw ConfigError("lattice constraint violated: foot shift " +
                                      std::to_string(shift) + " is not a whole number of nodes");
                const double whole = std::floor(shift);
                const double theta = 1.0 - (shift - whole);
                const long base = -static_cast<long>(whole) - 1 + ghosts;
                for (int i = 0; i < grid.space_nodes(); ++i)
                    dst[i] = interpolate_cell(ctx.interpolation, col.data() + base + i, theta,
                                              ctx.weno_eps);
            }
        });
    }
    return out;
}

PhaseField relax(const PhaseField& g, const StepContext& ctx, double tau, PhaseField* equilibrium) {
    const PhaseGrid& grid = ctx.grid;
    const KineticModel& model = ctx.model;
    if (g.components() != model.components())
        throw std::invalid_argument("relax: field components do not match the kinetic model");
    PhaseField out(g.components(), grid);
    if (equilibrium) *equilibrium = PhaseField(g.components(), grid);
    const std::size_t row_len = static_cast<std::size_t>(g.components()) * grid.velocity_nodes();

    parallel_for(grid.space_nodes(), ctx.threads, [&](int ibegin, int iend) {
        std::vector<double> rows(row_len), eq(row_len);
        for (int i = ibegin; i < iend; ++i) {
            g.gather_rows(i, rows);
            HydroState state;
            try {
                state = model.hydro(rows, grid);
                model.equilibrium(state, grid, eq);
            } catch (const DegenerateMoments& e) {
                throw e.located(i, ctx.step_index);
            }
            if (equilibrium) equilibrium->scatter_rows(i, eq);
            for (std::size_t n = 0; n < row_len; ++n) rows[n] = relaxation_solve(rows[n], eq[n], tau);
            out.scatter_rows(i, rows);
        }
    });
    return out;
}

// ---------------------------------------------------------------------------
// One-step methods

PhaseField step_euler1(const PhaseField& f, const StepContext& ctx) {
    return relax(transport(f, ctx, 1.0), ctx, ctx.dt / ctx.eps);
}

PhaseField step_dirk(const PhaseField& f, const ButcherTableau& tab, const StepContext& ctx) {
    const int stages = tab.stages();
    std::vector<PhaseField> fluxes;
    fluxes.reserve(stages);
    PhaseField stage;
    for (int l = 0; l < stages; ++l) {
        // Base value and earlier fluxes along the characteristic through (x_i, t^n + c_l dt).
        PhaseField g = transport(f, ctx, tab.c[l]);
        for (int k = 0; k < l; ++k) {
            if (tab.a[l][k] == 0.0) continue;
            g.axpy(ctx.dt * tab.a[l][k], transport(fluxes[k], ctx, tab.c[l] - tab.c[k]));
        }
        const double diag = tab.a[l][l];
        stage = relax(g, ctx, diag * ctx.dt / ctx.eps);
        if (l + 1 < stages) {
            PhaseField flux = stage;
            flux.axpy(-1.0, g);
            flux *= 1.0 / (diag * ctx.dt);
            fluxes.push_back(std::move(flux));
        }
    }
    return stage;
}

PhaseField step_rk2(const PhaseField& f, const StepContext& ctx) {
    static const ButcherTableau tab = ButcherTableau::dirk2();
    return step_dirk(f, tab, ctx);
}

PhaseField step_rk3(const PhaseField& f, const StepContext& ctx) {
    static const ButcherTableau tab = ButcherTableau::dirk3();
    return step_dirk(f, tab, ctx);
}

// ---------------------------------------------------------------------------
// Multistep methods

PhaseField step_bdf2(const PhaseField& fn, const PhaseField& fnm1, const StepContext& ctx) {
    PhaseField g = transport(fn, ctx, 1.0);
    g *= 4.0 / 3.0;
    g.axpy(-1.0 / 3.0, transport(fnm1, ctx, 2.0));
    return relax(g, ctx, (2.0 / 3.0) * ctx.dt / ctx.eps);
}

PhaseField step_bdf3(const PhaseField& fn, const PhaseField& fnm1, const PhaseField& fnm2,
                     const StepContext& ctx) {
    PhaseField g = transport(fn, ctx, 1.0);
    g *= 18.0 / 11.0;
    g.axpy(-9.0 / 11.0, transport(fnm1, ctx, 2.0));
    g.axpy(2.0 / 11.0, transport(fnm2, ctx, 3.0));
    return relax(g, ctx, (6.0 / 11.0) * ctx.dt / ctx.eps);
}

BdfHistory::BdfHistory(double dt, int depth) : dt_(dt), depth_(depth) {
    if (!(dt > 0.0)) throw std::invalid_argument("BDF history needs a positive dt");
}

void BdfHistory::push(PhaseField f, double t) {
    if (!levels_.empty()) {
        const double gap = t - levels_.front().time;
        if (std::abs(gap - dt_) > 1e-9 * dt_)
            throw std::logic_error("BDF history spacing " + std::to_string(gap) +
                                   " differs from dt " + std::to_string(dt_));
    }
    levels_.push_front(Level{std::move(f), t});
    while (static_cast<int>(levels_.size()) > depth_) levels_.pop_back();
}

PhaseField step_bdf(const BdfHistory& history, int order, const StepContext& ctx) {
    if (order != 2 && order != 3) throw std::invalid_argument("BDF order must be 2 or 3");
    if (std::abs(history.dt() - ctx.dt) > 1e-12 * ctx.dt)
        throw std::logic_error("BDF history was built with a different dt; restart with the RK predictor");
    if (!history.ready(order))
        throw std::logic_error("BDF" + std::to_string(order) + " needs " + std::to_string(order) +
                               " history levels; run the RK predictor first");
    if (order == 2) return step_bdf2(history.level(0), history.level(1), ctx);
    return step_bdf3(history.level(0), history.level(1), history.level(2), ctx);
}

BdfHistory bdf_startup(const PhaseField& f0, int order, const StepContext& ctx, double t0) {
    if (order != 2 && order != 3) throw std::invalid_argument("BDF order must be 2 or 3");
    BdfHistory history(ctx.dt);
    history.push(f0, t0);
    for (int s = 1; s < order; ++s) {
        const StepContext step_ctx = [&] {
            StepContext c = ctx;
            c.step_index = ctx.step_index + s - 1;
            return c;
        }();
        PhaseField next = order == 2 ? step_rk2(history.level(0), step_ctx)
                                     : step_rk3(history.level(0), step_ctx);
        history.push(std::move(next), t0 + s * ctx.dt);
    }
    return history;
}

PhaseField step_once(std::span<const PhaseField> history, Integrator integrator,
                     const StepContext& ctx) {
    if (history.empty()) throw std::invalid_argument("step_once needs the current level");
    auto need = [&](std::size_t levels) {
        if (history.size() < levels)
            throw std::logic_error(std::string(to_string(integrator)) + " needs " +
                                   std::to_string(levels) +
                                   " history levels; run the RK predictor first");
    };
    switch (integrator) {
        case Integrator::Euler1: return step_euler1(history[0], ctx);
        case Integrator::RK2: return step_rk2(history[0], ctx);
        case Integrator::RK3: return step_rk3(history[0], ctx);
        case Integrator::BDF2: need(2); return step_bdf2(history[0], history[1], ctx);
        case Integrator::BDF3: need(3); return step_bdf3(history[0], history[1], history[2], ctx);
        case Integrator::LatticeEuler:
        case Integrator::LatticeBDF2:
        case Integrator::LatticeBDF3: return step_lattice(history, integrator, ctx);
        case Integrator::LatticeRK2: return step_lattice_rk2(history[0], ctx);
    }
    throw std::invalid_argument("unknown integrator");
}

}  // namespace bgk
