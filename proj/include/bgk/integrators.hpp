#pragma once

#include <deque>
#include <span>
#include <vector>

#include "bgk/field.hpp"
#include "bgk/grid.hpp"
#include "bgk/kinetic_model.hpp"

namespace bgk {

/// Diagonally implicit Runge-Kutta tableau (lower-triangular A).
struct ButcherTableau {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<double> c;

    int stages() const { return static_cast<int>(b.size()); }
    /// Last row of A equals b.
    bool stiffly_accurate() const;
    /// max_l |sum_k a_lk - c_l|
    double row_sum_defect() const;

    /// Second order, alpha = 1 - sqrt(2)/2.
    static ButcherTableau dirk2();
    /// Third order, gamma the middle root of 6x^3 - 18x^2 + 9x - 1;
    /// c1 = gamma so that rows sum to c.
    static ButcherTableau dirk3();
    /// Second order with c = (1/3, 1): every stage foot is a node when dv*dt = 3 dx.
    static ButcherTableau lattice_dirk2();
};

double dirk2_alpha();
double dirk3_gamma();
double dirk3_delta();

/// Everything one step needs besides the field itself.
struct StepContext {
    const PhaseGrid& grid;
    const KineticModel& model;
    Boundary boundary = Boundary::Periodic;
    Interpolation interpolation = Interpolation::Linear;
    double eps = 1.0;
    double dt = 0.0;
    double weno_eps = 1e-6;
    int threads = 1;
    long step_index = 0;

    StepContext with_dt(double new_dt) const;
    StepContext with_interpolation(Interpolation kind) const;
};

StepContext make_context(const PhaseGrid& grid, const KineticModel& model, const SchemeConfig& cfg,
                         double dt);

/// Values of every component at the characteristic feet x_i - c*v_j*dt.
/// Feet within 1e-11 node spacings of a node are fetched from that node
/// (through the boundary mapping) without interpolation; with
/// Interpolation::None any other foot is a ConfigError.
PhaseField transport(const PhaseField& f, const StepContext& ctx, double c);

/// Implicit relaxation of the combination g toward the equilibrium built from
/// g's own moments: out = (g + tau*M[g]) / (1 + tau). When `equilibrium` is
/// non-null it receives M[g].
PhaseField relax(const PhaseField& g, const StepContext& ctx, double tau,
                 PhaseField* equilibrium = nullptr);

PhaseField step_euler1(const PhaseField& f, const StepContext& ctx);
/// Semi-Lagrangian DIRK: stage values are solved on grid nodes, fluxes are
/// recovered as K = (F - g)/(a_ll dt) and transported to later stages.
PhaseField step_dirk(const PhaseField& f, const ButcherTableau& tableau, const StepContext& ctx);
PhaseField step_rk2(const PhaseField& f, const StepContext& ctx);
PhaseField step_rk3(const PhaseField& f, const StepContext& ctx);
PhaseField step_bdf2(const PhaseField& fn, const PhaseField& fnm1, const StepContext& ctx);
PhaseField step_bdf3(const PhaseField& fn, const PhaseField& fnm1, const PhaseField& fnm2,
                     const StepContext& ctx);

/// Past levels at constant spacing dt, newest first.
class BdfHistory {
  public:
    explicit BdfHistory(double dt, int depth = 3);

    /// Appends the newest level. Throws std::logic_error when t is not the
    /// previous time plus dt.
    void push(PhaseField f, double t);
    void clear() { levels_.clear(); }

    int size() const { return static_cast<int>(levels_.size()); }
    double dt() const { return dt_; }
    const PhaseField& level(int back) const { return levels_.at(back).field; }
    double time(int back) const { return levels_.at(back).time; }
    bool ready(int order) const { return size() >= order; }

  private:
    struct Level {
        PhaseField field;
        double time;
    };
    double dt_;
    int depth_;
    std::deque<Level> levels_;
};

/// BDF step from a history; throws std::logic_error if the history is too
/// short or was built with a different dt.
PhaseField step_bdf(const BdfHistory& history, int order, const StepContext& ctx);

/// History for BDF of the given order: f0 plus one RK2 step (order 2) or two
/// RK3 steps (order 3).
BdfHistory bdf_startup(const PhaseField& f0, int order, const StepContext& ctx, double t0 = 0.0);

/// One step of any integrator. `history` holds the current level first and
/// older levels after it (BDF orders need 2 or 3 levels).
PhaseField step_once(std::span<const PhaseField> history, Integrator integrator,
                     const StepContext& ctx);

}  // namespace bgk
