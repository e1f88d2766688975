#include "bgk/kinetic_model.hpp"

namespace bgk {

double KineticModel::gas_gamma() const {
    const double n = velocity_dimension();
    return (n + 2.0) / n;
}

double KineticModel::total_energy(const HydroState& s) const {
    return 0.5 * s.rho * s.u * s.u + 0.5 * velocity_dimension() * s.rho * R() * s.T;
}

HydroState ClassicModel::hydro(std::span<const double> rows, const PhaseGrid& grid) const {
    return discrete_moments(rows, grid).hydro(R());
}

void ClassicModel::equilibrium(const HydroState& state, const PhaseGrid& grid,
                               std::span<double> rows) const {
    maxwellian_row(state, grid, R(), rows);
}

}  // namespace bgk
