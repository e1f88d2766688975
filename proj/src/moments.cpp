#include "bgk/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bgk {

namespace {

std::string describe(const std::string& reason, std::optional<int> node, std::optional<long> step) {
    std::string msg = "degenerate moments: " + reason;
    if (node) msg += " at space node " + std::to_string(*node);
    if (step) msg += " during step " + std::to_string(*step);
    return msg;
}

}  // namespace

DegenerateMoments::DegenerateMoments(const std::string& what, std::optional<int> node,
                                     std::optional<long> step)
    : NumericalError(describe(what, node, step)), reason_(what), node_(node), step_(step) {}

DegenerateMoments DegenerateMoments::located(int node, long step) const {
    return DegenerateMoments(reason_, node, step);
}

double MacroMoments::velocity() const {
    if (!(rho > rho_min)) throw DegenerateMoments("density " + std::to_string(rho) + " <= rho_min");
    return momentum / rho;
}

double MacroMoments::temperature(double R) const {
    const double u = velocity();
    const double T = (2.0 * energy / rho - u * u) / R;
    if (!(T > temperature_min))
        throw DegenerateMoments("temperature " + std::to_string(T) + " <= T_min");
    return T;
}

HydroState MacroMoments::hydro(double R) const { return {rho, velocity(), temperature(R)}; }

MacroMoments discrete_moments(std::span<const double> row, const PhaseGrid& grid) {
    if (row.size() != static_cast<std::size_t>(grid.velocity_nodes()))
        throw std::invalid_argument("discrete_moments: row length must be 2Nv+1");
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (int k = 0; k < grid.velocity_nodes(); ++k) {
        const double v = grid.velocity_at(k);
        const double f = row[k];
        m0 += f;
        m1 += v * f;
        m2 += 0.5 * v * v * f;
    }
    const double dv = grid.dv();
    return {m0 * dv, m1 * dv, m2 * dv};
}

double maxwellian(const HydroState& s, double v, double R) {
    if (!(s.rho > rho_min)) throw DegenerateMoments("Maxwellian requested with non-positive density");
    if (!(s.T > temperature_min))
        throw DegenerateMoments("Maxwellian requested with non-positive temperature");
    const double rt = R * s.T;
    const double w = v - s.u;
    return s.rho / std::sqrt(2.0 * std::numbers::pi * rt) * std::exp(-w * w / (2.0 * rt));
}

double maxwellian_eval(const MacroMoments& mom, double v, double R) {
    return maxwellian(mom.hydro(R), v, R);
}

void maxwellian_row(const HydroState& s, const PhaseGrid& grid, double R, std::span<double> out) {
    if (out.size() != static_cast<std::size_t>(grid.velocity_nodes()))
        throw std::invalid_argument("maxwellian_row: output length must be 2Nv+1");
    if (!(s.rho > rho_min)) throw DegenerateMoments("Maxwellian requested with non-positive density");
    if (!(s.T > temperature_min))
        throw DegenerateMoments("Maxwellian requested with non-positive temperature");
    const double rt = R * s.T;
    const double scale = s.rho / std::sqrt(2.0 * std::numbers::pi * rt);
    for (int k = 0; k < grid.velocity_nodes(); ++k) {
        const double w = grid.velocity_at(k) - s.u;
        out[k] = scale * std::exp(-w * w / (2.0 * rt));
    }
}

}  // namespace bgk
