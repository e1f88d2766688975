#include "bgk/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>

namespace bgk {

namespace {

constexpr std::array<std::pair<Integrator, std::string_view>, 9> integrator_names{{
    {Integrator::Euler1, "Euler1"},
    {Integrator::RK2, "RK2"},
    {Integrator::RK3, "RK3"},
    {Integrator::BDF2, "BDF2"},
    {Integrator::BDF3, "BDF3"},
    {Integrator::LatticeEuler, "LatEuler"},
    {Integrator::LatticeBDF2, "LatBDF2"},
    {Integrator::LatticeBDF3, "LatBDF3"},
    {Integrator::LatticeRK2, "LatRK2"},
}};

constexpr std::array<std::pair<Interpolation, std::string_view>, 4> interpolation_names{{
    {Interpolation::Linear, "linear"},
    {Interpolation::WENO23, "weno23"},
    {Interpolation::WENO35, "weno35"},
    {Interpolation::None, "none"},
}};

constexpr std::array<std::pair<Boundary, std::string_view>, 3> boundary_names{{
    {Boundary::Periodic, "periodic"},
    {Boundary::Reflective, "reflective"},
    {Boundary::FreeFlow, "freeflow"},
}};

template <class Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum e) {
    for (const auto& [value, name] : table)
        if (value == e) return name;
    return "?";
}

template <class Enum, std::size_t N>
Enum value_of(const std::array<std::pair<Enum, std::string_view>, N>& table, std::string_view s,
              const char* what) {
    for (const auto& [value, name] : table)
        if (name == s) return value;
    throw ConfigError(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

}  // namespace

bool is_lattice(Integrator integrator) {
    switch (integrator) {
        case Integrator::LatticeEuler:
        case Integrator::LatticeBDF2:
        case Integrator::LatticeBDF3:
        case Integrator::LatticeRK2:
            return true;
        default:
            return false;
    }
}

int formal_order(Integrator integrator) {
    switch (integrator) {
        case Integrator::Euler1:
        case Integrator::LatticeEuler:
            return 1;
        case Integrator::RK2:
        case Integrator::BDF2:
        case Integrator::LatticeBDF2:
        case Integrator::LatticeRK2:
            return 2;
        case Integrator::RK3:
        case Integrator::BDF3:
        case Integrator::LatticeBDF3:
            return 3;
    }
    return 1;
}

int lattice_stride(Integrator integrator) {
    if (!is_lattice(integrator)) return 0;
    return integrator == Integrator::LatticeRK2 ? 3 : 1;
}

std::string_view to_string(Integrator integrator) { return name_of(integrator_names, integrator); }
std::string_view to_string(Interpolation interpolation) {
    return name_of(interpolation_names, interpolation);
}
std::string_view to_string(Boundary boundary) { return name_of(boundary_names, boundary); }

Integrator parse_integrator(std::string_view name) {
    return value_of(integrator_names, name, "scheme");
}
Interpolation parse_interpolation(std::string_view name) {
    return value_of(interpolation_names, name, "interpolation");
}
Boundary parse_boundary(std::string_view name) {
    return value_of(boundary_names, name, "boundary condition");
}

PhaseGrid::PhaseGrid(double x0, double xN, int nx, double vmax, int nv)
    : x0_(x0), xN_(xN), nx_(nx), vmax_(vmax), nv_(nv) {
    if (!std::isfinite(x0) || !std::isfinite(xN) || !(xN > x0))
        throw ConfigError("space domain must satisfy xN > x0");
    if (nx < 4) throw ConfigError("Nx must be at least 4, got " + std::to_string(nx));
    if (nv < 1) throw ConfigError("Nv must be at least 1, got " + std::to_string(nv));
    if (!std::isfinite(vmax) || !(vmax > 0.0)) throw ConfigError("vmax must be positive");
    dx_ = (xN - x0) / nx;
    dv_ = vmax / nv;
}

PhaseGrid build_grid(double x0, double xN, int nx, double vmax, int nv) {
    return PhaseGrid(x0, xN, nx, vmax, nv);
}

TimeControl TimeControl::from_cfl(const PhaseGrid& grid, double cfl, double t_final) {
    if (!(cfl > 0.0) || !std::isfinite(cfl)) throw ConfigError("CFL must be positive");
    return from_dt(grid, cfl * grid.dx() / grid.vmax(), t_final);
}

TimeControl TimeControl::from_dt(const PhaseGrid& grid, double dt, double t_final) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("time step must be positive");
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw ConfigError("final time must be >= 0");
    return TimeControl{dt * grid.vmax() / grid.dx(), dt, t_final};
}

StepPlan plan_steps(double dt, double t_final) {
    if (!(dt > 0.0)) throw ConfigError("time step must be positive");
    const double ratio = t_final / dt;
    const double nearest = std::round(ratio);
    // A ratio within roundoff of an integer is a whole number of steps.
    if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest))
        return StepPlan{static_cast<long>(nearest), 0.0};
    const long full = static_cast<long>(std::floor(ratio));
    return StepPlan{full, t_final - full * dt};
}

void SchemeConfig::validate() const {
    if (!(eps > 0.0)) throw ConfigError("relaxation time eps must be positive");
    if (!(R > 0.0) || !std::isfinite(R)) throw ConfigError("gas constant R must be positive");
    if (!(weno_eps > 0.0)) throw ConfigError("WENO regularization must be positive");
    if (threads < 1) throw ConfigError("thread count must be >= 1");
    if (is_lattice(integrator) && interpolation != Interpolation::None)
        throw ConfigError(std::string(to_string(integrator)) +
                          " is interpolation-free and requires interp = none");
    if (!is_lattice(integrator) && interpolation == Interpolation::None)
        throw ConfigError(std::string(to_string(integrator)) + " requires an interpolation");
}

Interpolation default_interpolation(Integrator integrator) {
    if (is_lattice(integrator)) return Interpolation::None;
    return integrator == Integrator::Euler1 ? Interpolation::Linear : Interpolation::WENO23;
}

std::string scheme_label(const SchemeConfig& cfg) {
    std::string label(to_string(cfg.integrator));
    switch (cfg.interpolation) {
        case Interpolation::Linear: label += "L"; break;
        case Interpolation::WENO23: label += "W23"; break;
        case Interpolation::WENO35: label += "W35"; break;
        case Interpolation::None: break;
    }
    return label;
}

SchemeConfig parse_scheme_label(std::string_view label) {
    SchemeConfig cfg;
    auto strip = [&](std::string_view suffix) {
        if (label.size() > suffix.size() && label.ends_with(suffix)) {
            label.remove_suffix(suffix.size());
            return true;
        }
        return false;
    };
    std::optional<Interpolation> interp;
    if (strip("W23")) interp = Interpolation::WENO23;
    else if (strip("W35")) interp = Interpolation::WENO35;
    else if (strip("L")) interp = Interpolation::Linear;
    cfg.integrator = parse_integrator(label);
    cfg.interpolation = interp.value_or(default_interpolation(cfg.integrator));
    return cfg;
}

}  // namespace bgk
