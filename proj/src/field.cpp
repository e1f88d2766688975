#include "bgk/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bgk {

PhaseField::PhaseField(int components, int space_nodes, int velocity_nodes, double fill)
    : components_(components), space_nodes_(space_nodes), velocity_nodes_(velocity_nodes) {
    if (components < 1 || space_nodes < 1 || velocity_nodes < 1)
        throw std::invalid_argument("PhaseField dimensions must be positive");
    values_.assign(static_cast<std::size_t>(components) * space_nodes * velocity_nodes, fill);
}

PhaseField::PhaseField(int components, const PhaseGrid& grid, double fill)
    : PhaseField(components, grid.space_nodes(), grid.velocity_nodes(), fill) {}

void PhaseField::gather_rows(int i, std::span<double> out) const {
    std::size_t n = 0;
    for (int c = 0; c < components_; ++c)
        for (int k = 0; k < velocity_nodes_; ++k) out[n++] = (*this)(c, i, k);
}

void PhaseField::scatter_rows(int i, std::span<const double> in) {
    std::size_t n = 0;
    for (int c = 0; c < components_; ++c)
        for (int k = 0; k < velocity_nodes_; ++k) (*this)(c, i, k) = in[n++];
}

bool PhaseField::same_shape(const PhaseField& other) const {
    return components_ == other.components_ && space_nodes_ == other.space_nodes_ &&
           velocity_nodes_ == other.velocity_nodes_;
}

bool PhaseField::all_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

PhaseField& PhaseField::operator+=(const PhaseField& rhs) { return axpy(1.0, rhs); }

PhaseField& PhaseField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

PhaseField& PhaseField::axpy(double a, const PhaseField& x) {
    if (!same_shape(x)) throw std::invalid_argument("PhaseField shape mismatch");
    for (std::size_t n = 0; n < values_.size(); ++n) values_[n] += a * x.values_[n];
    return *this;
}

PhaseField linear_combination(std::span<const double> weights,
                              std::span<const PhaseField* const> fields) {
    if (weights.size() != fields.size() || fields.empty())
        throw std::invalid_argument("linear_combination: weights and fields must match");
    PhaseField out = *fields[0];
    out *= weights[0];
    for (std::size_t k = 1; k < fields.size(); ++k) out.axpy(weights[k], *fields[k]);
    return out;
}

double max_abs_difference(const PhaseField& a, const PhaseField& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("PhaseField shape mismatch");
    double m = 0.0;
    auto va = a.values();
    auto vb = b.values();
    for (std::size_t n = 0; n < va.size(); ++n) m = std::max(m, std::abs(va[n] - vb[n]));
    return m;
}

}  // namespace bgk
