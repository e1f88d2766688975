#include "bgk/boundaries.hpp"

#include <cmath>
#include <stdexcept>

#include "bgk/weno.hpp"

namespace bgk {

namespace {

long floor_mod(long a, long n) {
    const long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

NodeSource boundary_source(Boundary bc, const PhaseGrid& grid, long node, int velocity) {
    const long nx = grid.nx();
    if (node >= 0 && node <= nx) return {static_cast<int>(node), velocity};
    switch (bc) {
        case Boundary::Periodic:
            return {static_cast<int>(floor_mod(node, nx)), velocity};
        case Boundary::Reflective: {
            const long r = floor_mod(node, 2 * nx);
            if (r <= nx) return {static_cast<int>(r), velocity};
            return {static_cast<int>(2 * nx - r), grid.mirrored(velocity)};
        }
        case Boundary::FreeFlow:
            return {node < 0 ? 0 : static_cast<int>(nx), velocity};
    }
    return {0, velocity};
}

int required_ghosts(Interpolation kind, double max_shift) {
    const int overhang = static_cast<int>(std::ceil(std::abs(max_shift)));
    return overhang + std::max(stencil_left(kind), stencil_right(kind)) + 1;
}

GhostProfile::GhostProfile(const PhaseField& field, int component, const PhaseGrid& grid,
                           Boundary bc, int ghosts)
    : ghosts_(ghosts), interior_(grid.space_nodes()), stride_(grid.space_nodes() + 2 * ghosts) {
    if (ghosts < 0) throw std::invalid_argument("ghost count must be non-negative");
    if (field.space_nodes() != grid.space_nodes() || field.velocity_nodes() != grid.velocity_nodes())
        throw std::invalid_argument("field does not match grid");
    if (component < 0 || component >= field.components())
        throw std::invalid_argument("component index out of range");
    values_.resize(static_cast<std::size_t>(stride_) * grid.velocity_nodes());
    for (int k = 0; k < grid.velocity_nodes(); ++k) {
        double* col = values_.data() + static_cast<std::size_t>(k) * stride_;
        const auto interior = field.column(component, k);
        for (int i = 0; i < interior_; ++i) col[i + ghosts] = interior[i];
        for (int g = 1; g <= ghosts; ++g) {
            const NodeSource left = boundary_source(bc, grid, -g, k);
            const NodeSource right = boundary_source(bc, grid, grid.nx() + g, k);
            col[ghosts - g] = field(component, left.node, left.velocity);
            col[ghosts + grid.nx() + g] = field(component, right.node, right.velocity);
        }
    }
}

GhostProfile extend(const PhaseField& field, int component, const PhaseGrid& grid, Boundary bc,
                    int ghosts) {
    return GhostProfile(field, component, grid, bc, ghosts);
}

}  // namespace bgk
