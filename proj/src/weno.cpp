#include "bgk/weno.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bgk {

namespace weno {

namespace {

// Lagrange interpolants on unit-spaced nodes first, first+1, ... evaluated
// at theta; s points at node 0.
double quadratic(const double* s, int first, double theta) {
    const double d0 = theta - first;
    const double d1 = d0 - 1.0;
    const double d2 = d0 - 2.0;
    return 0.5 * d1 * d2 * s[first] - d0 * d2 * s[first + 1] + 0.5 * d0 * d1 * s[first + 2];
}

double cubic(const double* s, int first, double theta) {
    const double d0 = theta - first;
    const double d1 = d0 - 1.0;
    const double d2 = d0 - 2.0;
    const double d3 = d0 - 3.0;
    return -d1 * d2 * d3 / 6.0 * s[first] + d0 * d2 * d3 / 2.0 * s[first + 1] -
           d0 * d1 * d3 / 2.0 * s[first + 2] + d0 * d1 * d2 / 6.0 * s[first + 3];
}

}  // namespace

// Quadratic forms in the first differences, so constants give exactly zero.
double beta23_left(double a, double b, double c) {
    const double p = b - a, q = c - b;
    return 13.0 / 12.0 * p * p - 13.0 / 6.0 * p * q + 25.0 / 12.0 * q * q;
}

double beta23_right(double b, double c, double d) {
    const double p = c - b, q = d - c;
    return 25.0 / 12.0 * p * p - 13.0 / 6.0 * p * q + 13.0 / 12.0 * q * q;
}

double beta35_center(double a, double b, double c, double d) {
    const double p = b - a, q = c - b, r = d - c;
    return 61.0 / 45.0 * (p * p + r * r) + 961.0 / 180.0 * q * q - 781.0 / 180.0 * (p * q + q * r) +
           293.0 / 180.0 * p * r;
}

double beta35_right(double a, double b, double c, double d) {
    const double p = b - a, q = c - b, r = d - c;
    return 407.0 / 90.0 * p * p + 1561.0 / 180.0 * q * q + 61.0 / 45.0 * r * r -
           1951.0 / 180.0 * p * q + 683.0 / 180.0 * p * r - 1171.0 / 180.0 * q * r;
}

double beta35_left(double vm2, double vm1, double v0, double v1) {
    return beta35_right(v1, v0, vm1, vm2);
}

std::array<double, 2> linear_weights23(double theta) {
    return {(2.0 - theta) / 3.0, (theta + 1.0) / 3.0};
}

std::array<double, 3> linear_weights35(double theta) {
    return {(theta - 2.0) * (theta - 3.0) / 20.0, -(theta + 2.0) * (theta - 3.0) / 10.0,
            (theta + 2.0) * (theta + 1.0) / 20.0};
}

double linear_kernel(const double* s, double theta) { return (1.0 - theta) * s[0] + theta * s[1]; }

double weno23_linear_kernel(const double* s, double theta) {
    const auto c = linear_weights23(theta);
    return c[0] * quadratic(s, -1, theta) + c[1] * quadratic(s, 0, theta);
}

double weno23_kernel(const double* s, double theta, double weno_eps) {
    const std::array<double, 2> beta{beta23_left(s[-1], s[0], s[1]), beta23_right(s[0], s[1], s[2])};
    const auto w = nonlinear_weights(linear_weights23(theta), beta, weno_eps);
    return w[0] * quadratic(s, -1, theta) + w[1] * quadratic(s, 0, theta);
}

double weno35_linear_kernel(const double* s, double theta) {
    const auto c = linear_weights35(theta);
    return c[0] * cubic(s, -2, theta) + c[1] * cubic(s, -1, theta) + c[2] * cubic(s, 0, theta);
}

double weno35_kernel(const double* s, double theta, double weno_eps) {
    const std::array<double, 3> beta{beta35_left(s[-2], s[-1], s[0], s[1]),
                                     beta35_center(s[-1], s[0], s[1], s[2]),
                                     beta35_right(s[0], s[1], s[2], s[3])};
    const auto w = nonlinear_weights(linear_weights35(theta), beta, weno_eps);
    return w[0] * cubic(s, -2, theta) + w[1] * cubic(s, -1, theta) + w[2] * cubic(s, 0, theta);
}

}  // namespace weno

int stencil_left(Interpolation kind) {
    switch (kind) {
        case Interpolation::Linear: return 0;
        case Interpolation::WENO23: return 1;
        case Interpolation::WENO35: return 2;
        case Interpolation::None: return 0;
    }
    return 0;
}

int stencil_right(Interpolation kind) {
    switch (kind) {
        case Interpolation::Linear: return 1;
        case Interpolation::WENO23: return 2;
        case Interpolation::WENO35: return 3;
        case Interpolation::None: return 0;
    }
    return 0;
}

double interpolate(Interpolation kind, std::span<const double> data, double x0, double dx, double x,
                   double weno_eps) {
    if (!(dx > 0.0)) throw std::invalid_argument("interpolation spacing must be positive");
    const double p = (x - x0) / dx;
    const double cell = std::floor(p);
    const double theta = p - cell;
    if (!std::isfinite(p) || cell < 0.0 || cell >= static_cast<double>(data.size()))
        throw std::out_of_range("interpolation point " + std::to_string(x) + " outside data");
    const auto j = static_cast<std::ptrdiff_t>(cell);
    if (theta == 0.0) return data[static_cast<std::size_t>(j)];
    if (kind == Interpolation::None)
        throw std::invalid_argument("interpolation-free evaluation requested off the grid");
    const std::ptrdiff_t lo = j - stencil_left(kind);
    const std::ptrdiff_t hi = j + stencil_right(kind);
    if (lo < 0 || hi >= static_cast<std::ptrdiff_t>(data.size()))
        throw std::out_of_range("interpolation stencil around x = " + std::to_string(x) +
                                " not covered by data");
    const double* s = data.data() + j;
    switch (kind) {
        case Interpolation::Linear: return weno::linear_kernel(s, theta);
        case Interpolation::WENO23: return weno::weno23_kernel(s, theta, weno_eps);
        case Interpolation::WENO35: return weno::weno35_kernel(s, theta, weno_eps);
        case Interpolation::None: break;
    }
    return data[static_cast<std::size_t>(j)];
}

double linear_interp(std::span<const double> data, double x0, double dx, double x) {
    return interpolate(Interpolation::Linear, data, x0, dx, x);
}

double weno23_interp(std::span<const double> data, double x0, double dx, double x,
                     double weno_eps) {
    return interpolate(Interpolation::WENO23, data, x0, dx, x, weno_eps);
}

double weno35_interp(std::span<const double> data, double x0, double dx, double x,
                     double weno_eps) {
    return interpolate(Interpolation::WENO35, data, x0, dx, x, weno_eps);
}

}  // namespace bgk
