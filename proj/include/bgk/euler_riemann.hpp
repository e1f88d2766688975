#pragma once

#include "bgk/grid.hpp"

namespace bgk {

/// Primitive gas-dynamics state.
struct EulerState {
    double rho = 1.0;
    double u = 0.0;
    double p = 1.0;
};

/// Exact solution of the Riemann problem for the Euler equations of an ideal
/// gas with adiabatic index gamma. The star state is solved at construction;
/// sample() evaluates the self-similar solution at xi = x/t.
class ExactRiemann {
  public:
    ExactRiemann(const EulerState& left, const EulerState& right, double gamma);

    double p_star() const { return p_star_; }
    double u_star() const { return u_star_; }
    double rho_star_left() const { return rho_star_left_; }
    double rho_star_right() const { return rho_star_right_; }
    bool left_shock() const { return p_star_ > left_.p; }
    bool right_shock() const { return p_star_ > right_.p; }
    int iterations() const { return iterations_; }

    /// Shock speed, or head and tail speeds of a rarefaction.
    double left_head() const;
    double left_tail() const;
    double right_head() const;
    double right_tail() const;

    /// Waves own the point where they start: xi on an edge belongs to the
    /// region on its right.
    EulerState sample(double xi) const;

    const EulerState& left() const { return left_; }
    const EulerState& right() const { return right_; }
    double gamma() const { return gamma_; }

  private:
    double pressure_function(double p, const EulerState& s, double c, double& derivative) const;
    double star_density(const EulerState& s) const;

    EulerState left_;
    EulerState right_;
    double gamma_;
    double c_left_;
    double c_right_;
    double p_star_ = 0.0;
    double u_star_ = 0.0;
    double rho_star_left_ = 0.0;
    double rho_star_right_ = 0.0;
    int iterations_ = 0;
};

EulerState euler_riemann_exact(const EulerState& left, const EulerState& right, double gamma,
                               double xi);

}  // namespace bgk
