#include "bgk/euler_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bgk {

namespace {

constexpr double tolerance = 1e-12;
constexpr int max_iterations = 100;

void check_state(const EulerState& s, const char* side) {
    if (!(s.rho > 0.0) || !(s.p > 0.0) || !std::isfinite(s.u))
        throw ConfigError(std::string("Riemann ") + side + " state needs rho > 0 and p > 0");
}

}  // namespace

double ExactRiemann::pressure_function(double p, const EulerState& s, double c,
                                       double& derivative) const {
    const double g = gamma_;
    if (p > s.p) {
        const double a = 2.0 / ((g + 1.0) * s.rho);
        const double b = (g - 1.0) / (g + 1.0) * s.p;
        const double q = std::sqrt(a / (p + b));
        derivative = q * (1.0 - 0.5 * (p - s.p) / (p + b));
        return (p - s.p) * q;
    }
    const double ratio = p / s.p;
    const double e = (g - 1.0) / (2.0 * g);
    derivative = std::pow(ratio, -(g + 1.0) / (2.0 * g)) / (s.rho * c);
    return 2.0 * c / (g - 1.0) * (std::pow(ratio, e) - 1.0);
}

double ExactRiemann::star_density(const EulerState& s) const {
    const double g = gamma_;
    const double ratio = p_star_ / s.p;
    if (p_star_ > s.p) {
        const double k = (g - 1.0) / (g + 1.0);
        return s.rho * (ratio + k) / (k * ratio + 1.0);
    }
    return s.rho * std::pow(ratio, 1.0 / g);
}

ExactRiemann::ExactRiemann(const EulerState& left, const EulerState& right, double gamma)
    : left_(left), right_(right), gamma_(gamma) {
    check_state(left, "left");
    check_state(right, "right");
    if (!(gamma > 1.0)) throw ConfigError("adiabatic index must exceed 1");
    c_left_ = std::sqrt(gamma * left.p / left.rho);
    c_right_ = std::sqrt(gamma * right.p / right.rho);
    const double du = right.u - left.u;
    if (2.0 * (c_left_ + c_right_) / (gamma - 1.0) <= du)
        throw NumericalError("Riemann data generate vacuum");

    // Two-rarefaction guess, which is exact when both waves are rarefactions.
    const double e = (gamma - 1.0) / (2.0 * gamma);
    const double num = c_left_ + c_right_ - 0.5 * (gamma - 1.0) * du;
    const double den = c_left_ / std::pow(left.p, e) + c_right_ / std::pow(right.p, e);
    double p = std::pow(num / den, 1.0 / e);
    if (!(p > 0.0) || !std::isfinite(p)) p = 0.5 * (left.p + right.p);

    double residual = 0.0;
    bool converged = false;
    for (iterations_ = 1; iterations_ <= max_iterations; ++iterations_) {
        double dl = 0.0, dr = 0.0;
        residual = pressure_function(p, left_, c_left_, dl) +
                   pressure_function(p, right_, c_right_, dr) + du;
        double next = p - residual / (dl + dr);
        if (!(next > 0.0)) next = 0.5 * p;
        const double change = 2.0 * std::abs(next - p) / (next + p);
        p = next;
        if (change < tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "Riemann star pressure did not converge in " << max_iterations
            << " iterations (residual " << residual << ")";
        throw NumericalError(msg.str());
    }
    p_star_ = p;
    double dl = 0.0, dr = 0.0;
    const double fl = pressure_function(p, left_, c_left_, dl);
    const double fr = pressure_function(p, right_, c_right_, dr);
    u_star_ = 0.5 * (left.u + right.u) + 0.5 * (fr - fl);
    rho_star_left_ = star_density(left_);
    rho_star_right_ = star_density(right_);
}

double ExactRiemann::left_head() const {
    const double g = gamma_;
    if (left_shock())
        return left_.u - c_left_ * std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / left_.p +
                                             (g - 1.0) / (2.0 * g));
    return left_.u - c_left_;
}

double ExactRiemann::left_tail() const {
    if (left_shock()) return left_head();
    return u_star_ - std::sqrt(gamma_ * p_star_ / rho_star_left_);
}

double ExactRiemann::right_head() const {
    const double g = gamma_;
    if (right_shock())
        return right_.u + c_right_ * std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / right_.p +
                                               (g - 1.0) / (2.0 * g));
    return right_.u + c_right_;
}

double ExactRiemann::right_tail() const {
    if (right_shock()) return right_head();
    return u_star_ + std::sqrt(gamma_ * p_star_ / rho_star_right_);
}

EulerState ExactRiemann::sample(double xi) const {
    const double g = gamma_;
    if (xi < u_star_) {
        if (xi < left_head()) return left_;
        if (left_shock() || xi >= left_tail()) return {rho_star_left_, u_star_, p_star_};
        const double u = 2.0 / (g + 1.0) * (c_left_ + 0.5 * (g - 1.0) * left_.u + xi);
        const double c = 2.0 / (g + 1.0) * (c_left_ + 0.5 * (g - 1.0) * (left_.u - xi));
        const double rho = left_.rho * std::pow(c / c_left_, 2.0 / (g - 1.0));
        return {rho, u, left_.p * std::pow(c / c_left_, 2.0 * g / (g - 1.0))};
    }
    if (right_shock()) {
        if (xi < right_head()) return {rho_star_right_, u_star_, p_star_};
        return right_;
    }
    if (xi < right_tail()) return {rho_star_right_, u_star_, p_star_};
    if (xi >= right_head()) return right_;
    const double u = 2.0 / (g + 1.0) * (-c_right_ + 0.5 * (g - 1.0) * right_.u + xi);
    const double c = 2.0 / (g + 1.0) * (c_right_ - 0.5 * (g - 1.0) * (right_.u - xi));
    const double rho = right_.rho * std::pow(c / c_right_, 2.0 / (g - 1.0));
    return {rho, u, right_.p * std::pow(c / c_right_, 2.0 * g / (g - 1.0))};
}

EulerState euler_riemann_exact(const EulerState& left, const EulerState& right, double gamma,
                               double xi) {
    return ExactRiemann(left, right, gamma).sample(xi);
}

}  // namespace bgk
