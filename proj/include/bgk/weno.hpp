#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "bgk/grid.hpp"

namespace bgk {

inline constexpr double default_weno_eps = 1e-6;

/// Pointwise interpolation of uniformly sampled data, value k at x0 + k*dx.
///
/// The evaluation point x is located in cell j = floor((x - x0)/dx) and the
/// stencils are anchored to that cell. Nodal points return the sample itself.
/// Throws std::out_of_range when the stencil around the cell is not covered.
double linear_interp(std::span<const double> data, double x0, double dx, double x);
double weno23_interp(std::span<const double> data, double x0, double dx, double x,
                     double weno_eps = default_weno_eps);
double weno35_interp(std::span<const double> data, double x0, double dx, double x,
                     double weno_eps = default_weno_eps);
double interpolate(Interpolation kind, std::span<const double> data, double x0, double dx, double x,
                   double weno_eps = default_weno_eps);

/// Stencil nodes needed left / right of the containing cell's left node.
int stencil_left(Interpolation kind);
int stencil_right(Interpolation kind);

namespace weno {

// Smoothness indicators. Arguments are nodal values in ascending index order;
// the evaluation cell is always [x_j, x_{j+1}].

/// Stencil j-1, j, j+1.
double beta23_left(double vm1, double v0, double v1);
/// Stencil j, j+1, j+2.
double beta23_right(double v0, double v1, double v2);
/// Stencil j-2..j+1; the mirror image of beta35_right.
double beta35_left(double vm2, double vm1, double v0, double v1);
/// Stencil j-1..j+2.
double beta35_center(double vm1, double v0, double v1, double v2);
/// Stencil j..j+3.
double beta35_right(double v0, double v1, double v2, double v3);

/// Linear weights (C_L, C_R) at local coordinate theta = (x - x_j)/dx.
std::array<double, 2> linear_weights23(double theta);
/// Linear weights (C_L, C_C, C_R).
std::array<double, 3> linear_weights35(double theta);

/// Nonlinear weights omega_k = alpha_k / sum alpha, alpha_k = C_k/(beta_k + eps)^2.
template <std::size_t N>
std::array<double, N> nonlinear_weights(const std::array<double, N>& linear,
                                        const std::array<double, N>& beta, double weno_eps) {
    std::array<double, N> w{};
    double sum = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        const double d = beta[k] + weno_eps;
        w[k] = linear[k] / (d * d);
        sum += w[k];
    }
    for (double& x : w) x /= sum;
    return w;
}

// Unchecked kernels: s[j + offset] must exist for the stencil offsets of the
// scheme; theta in [0, 1].
double linear_kernel(const double* s, double theta);
double weno23_kernel(const double* s, double theta, double weno_eps);
double weno35_kernel(const double* s, double theta, double weno_eps);
/// Combination with the linear weights only (the underlying optimal interpolant).
double weno23_linear_kernel(const double* s, double theta);
double weno35_linear_kernel(const double* s, double theta);

}  // namespace weno

}  // namespace bgk
