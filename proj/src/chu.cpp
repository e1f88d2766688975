#include "bgk/chu.hpp"

#include <stdexcept>
#include <string>

#include "bgk/integrators.hpp"

namespace bgk {

ChuMoments chu_moments(std::span<const double> g1, std::span<const double> g2,
                       const PhaseGrid& grid, double R) {
    const auto n = static_cast<std::size_t>(grid.velocity_nodes());
    if (g1.size() != n || g2.size() != n)
        throw std::invalid_argument("chu_moments: rows must have 2Nv+1 entries");
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        m0 += g1[k];
        m1 += grid.velocity_at(static_cast<int>(k)) * g1[k];
    }
    const double dv = grid.dv();
    ChuMoments out;
    out.rho = m0 * dv;
    out.momentum = m1 * dv;
    if (!(out.rho > rho_min))
        throw DegenerateMoments("density " + std::to_string(out.rho) + " <= rho_min");
    const double u = out.momentum / out.rho;
    double centred = 0.0, transverse = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = grid.velocity_at(static_cast<int>(k)) - u;
        centred += w * w * g1[k];
        transverse += g2[k];
    }
    out.thermal = (centred + transverse) * dv;
    out.T = out.thermal / (3.0 * R * out.rho);
    if (!(out.T > temperature_min))
        throw DegenerateMoments("temperature " + std::to_string(out.T) + " <= T_min");
    return out;
}

void chu_equilibrium(const HydroState& state, const PhaseGrid& grid, double R,
                     std::span<double> m1, std::span<double> m2) {
    maxwellian_row(state, grid, R, m1);
    const double scale = 2.0 * R * state.T;
    for (std::size_t k = 0; k < m1.size(); ++k) m2[k] = scale * m1[k];
}

HydroState ChuModel::hydro(std::span<const double> rows, const PhaseGrid& grid) const {
    const auto n = static_cast<std::size_t>(grid.velocity_nodes());
    return chu_moments(rows.subspan(0, n), rows.subspan(n, n), grid, R()).hydro();
}

void ChuModel::equilibrium(const HydroState& state, const PhaseGrid& grid,
                           std::span<double> rows) const {
    const auto n = static_cast<std::size_t>(grid.velocity_nodes());
    chu_equilibrium(state, grid, R(), rows.subspan(0, n), rows.subspan(n, n));
}

ReducedField step_chu(std::span<const ReducedField> history, Integrator integrator,
                      const StepContext& ctx) {
    if (ctx.model.components() != 2)
        throw std::invalid_argument("step_chu requires the Chu kinetic model");
    if (history.empty() || history[0].components() != 2)
        throw std::invalid_argument("step_chu requires a (g1, g2) field");
    return step_once(history, integrator, ctx);
}

}  // namespace bgk
