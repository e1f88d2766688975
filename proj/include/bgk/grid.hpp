#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgk {

/// Thrown for inconsistent or out-of-range configuration (CLI exit code 2).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when the numerical state becomes unusable (CLI exit code 3).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Integrator {
    Euler1,
    RK2,
    RK3,
    BDF2,
    BDF3,
    LatticeEuler,
    LatticeBDF2,
    LatticeBDF3,
    LatticeRK2,
};

enum class Interpolation { Linear, WENO23, WENO35, None };

enum class Boundary { Periodic, Reflective, FreeFlow };

bool is_lattice(Integrator integrator);
int formal_order(Integrator integrator);
/// Stride s of the lattice relation dv*dt = s*dx (0 for interpolated schemes).
int lattice_stride(Integrator integrator);

std::string_view to_string(Integrator integrator);
std::string_view to_string(Interpolation interpolation);
std::string_view to_string(Boundary boundary);
Integrator parse_integrator(std::string_view name);
Interpolation parse_interpolation(std::string_view name);
Boundary parse_boundary(std::string_view name);

/// Uniform space grid x_i = x0 + i*dx (i = 0..Nx) times the symmetric
/// velocity grid v_j = j*dv (j = -Nv..Nv). Immutable once built.
class PhaseGrid {
  public:
    PhaseGrid(double x0, double xN, int nx, double vmax, int nv);

    double x0() const { return x0_; }
    double xN() const { return xN_; }
    double length() const { return xN_ - x0_; }
    int nx() const { return nx_; }
    int nv() const { return nv_; }
    double dx() const { return dx_; }
    double dv() const { return dv_; }
    double vmax() const { return vmax_; }

    int space_nodes() const { return nx_ + 1; }
    int velocity_nodes() const { return 2 * nv_ + 1; }

    double x(int i) const { return x0_ + i * dx_; }
    /// Velocity of signed index j in [-Nv, Nv].
    double v(int j) const { return j * dv_; }
    /// Velocity of storage index k in [0, 2Nv].
    double velocity_at(int k) const { return (k - nv_) * dv_; }
    /// Storage index of the mirrored velocity -v.
    int mirrored(int k) const { return 2 * nv_ - k; }

  private:
    double x0_;
    double xN_;
    int nx_;
    double vmax_;
    int nv_;
    double dx_;
    double dv_;
};

PhaseGrid build_grid(double x0, double xN, int nx, double vmax, int nv);

/// Unmapped foot x - v*(c*dt) of the characteristic through x.
constexpr double characteristic_foot(double x, double v, double c_dt) { return x - v * c_dt; }

struct TimeControl {
    double cfl = 0.0;
    double dt = 0.0;
    double t_final = 0.0;

    static TimeControl from_cfl(const PhaseGrid& grid, double cfl, double t_final);
    static TimeControl from_dt(const PhaseGrid& grid, double dt, double t_final);
};

/// Full steps of size dt plus an optional shortened last step landing on t_final.
struct StepPlan {
    long full_steps = 0;
    double last_dt = 0.0;
};

StepPlan plan_steps(double dt, double t_final);

struct SchemeConfig {
    Integrator integrator = Integrator::Euler1;
    Interpolation interpolation = Interpolation::Linear;
    Boundary boundary = Boundary::Periodic;
    double eps = 1.0;
    double R = 1.0;
    double weno_eps = 1e-6;
    int threads = 1;

    void validate() const;
};

/// Labels such as "BDF3W23", "RK2W35", "Euler1L", "LatBDF3".
std::string scheme_label(const SchemeConfig& cfg);
/// Inverse of scheme_label; also accepts bare integrator names (default interpolation).
SchemeConfig parse_scheme_label(std::string_view label);
Interpolation default_interpolation(Integrator integrator);

}  // namespace bgk
