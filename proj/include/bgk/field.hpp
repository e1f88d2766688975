#pragma once

#include <span>
#include <vector>

#include "bgk/grid.hpp"

namespace bgk {

/// Nodal phase-space values of one or more distribution components
/// (one for the classic model, two for the Chu pair).
///
/// Storage is [component][velocity][space] so that each velocity column,
/// which is what semi-Lagrangian transport interpolates, is contiguous.
class PhaseField {
  public:
    PhaseField() = default;
    PhaseField(int components, int space_nodes, int velocity_nodes, double fill = 0.0);
    PhaseField(int components, const PhaseGrid& grid, double fill = 0.0);

    int components() const { return components_; }
    int space_nodes() const { return space_nodes_; }
    int velocity_nodes() const { return velocity_nodes_; }
    std::size_t size() const { return values_.size(); }

    double& operator()(int c, int i, int k) { return values_[index(c, i, k)]; }
    double operator()(int c, int i, int k) const { return values_[index(c, i, k)]; }

    std::span<double> column(int c, int k) {
        return {values_.data() + index(c, 0, k), static_cast<std::size_t>(space_nodes_)};
    }
    std::span<const double> column(int c, int k) const {
        return {values_.data() + index(c, 0, k), static_cast<std::size_t>(space_nodes_)};
    }

    /// Copies the velocity rows at node i, component-major, into out
    /// (size components * velocity_nodes).
    void gather_rows(int i, std::span<double> out) const;
    void scatter_rows(int i, std::span<const double> in);

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    bool same_shape(const PhaseField& other) const;
    bool all_finite() const;

    PhaseField& operator+=(const PhaseField& rhs);
    PhaseField& operator*=(double s);
    /// this += a * x
    PhaseField& axpy(double a, const PhaseField& x);

    friend bool operator==(const PhaseField&, const PhaseField&) = default;

  private:
    std::size_t index(int c, int i, int k) const {
        return (static_cast<std::size_t>(c) * velocity_nodes_ + k) * space_nodes_ + i;
    }

    int components_ = 0;
    int space_nodes_ = 0;
    int velocity_nodes_ = 0;
    std::vector<double> values_;
};

/// Combination sum_k w_k * fields_k, all of the same shape.
PhaseField linear_combination(std::span<const double> weights,
                              std::span<const PhaseField* const> fields);

double max_abs_difference(const PhaseField& a, const PhaseField& b);

}  // namespace bgk
