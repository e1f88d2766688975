#pragma once

#include <span>
#include <vector>

#include "bgk/field.hpp"
#include "bgk/grid.hpp"

namespace bgk {

/// Interior node and velocity index that an (unbounded) node index maps to.
struct NodeSource {
    int node;
    int velocity;
};

/// Periodic: node Nx is identified with node 0 (period xN - x0).
/// Reflective: specular walls, f(x_{-k}, v) = f(x_k, -v), unfolded with period 2*Nx.
/// FreeFlow: zeroth-order extrapolation of the end nodes.
NodeSource boundary_source(Boundary bc, const PhaseGrid& grid, long node, int velocity);

/// Ghost nodes that cover the widest stencil around a foot that lies up to
/// max_shift nodes away from its departure node.
int required_ghosts(Interpolation kind, double max_shift);

/// One component of a field with `ghosts` extra nodes on each side of every
/// velocity column.
class GhostProfile {
  public:
    GhostProfile(const PhaseField& field, int component, const PhaseGrid& grid, Boundary bc,
                 int ghosts);

    int ghosts() const { return ghosts_; }
    int interior_nodes() const { return interior_; }
    /// Column of length interior_nodes + 2*ghosts; element m + ghosts holds node m.
    std::span<const double> column(int velocity) const {
        return {values_.data() + static_cast<std::size_t>(velocity) * stride_,
                static_cast<std::size_t>(stride_)};
    }
    double at(int node, int velocity) const { return column(velocity)[node + ghosts_]; }

  private:
    int ghosts_;
    int interior_;
    int stride_;
    std::vector<double> values_;
};

GhostProfile extend(const PhaseField& field, int component, const PhaseGrid& grid, Boundary bc,
                    int ghosts);

}  // namespace bgk
