#ifndef CONTACTLAB_SCALAR_FIELD_HPP
#define CONTACTLAB_SCALAR_FIELD_HPP

#include <functional>
#include <string>
#include <utility>

#include "contactlab/finite_diff.hpp"
#include "contactlab/types.hpp"

namespace contactlab {

/// A named real function on ambient space. The gradient is either an analytic
/// closure or, when absent, central finite differences of the value.
class ScalarField {
public:
  using ValueFn = std::function<double(const Vec&)>;
  using GradientFn = std::function<Vec(const Vec&)>;

  ScalarField() = default;

  ScalarField(std::string name, ValueFn value)
      : name_(std::move(name)), value_(std::move(value)) {}

  ScalarField(std::string name, ValueFn value, GradientFn gradient)
      : name_(std::move(name)), value_(std::move(value)), gradient_(std::move(gradient)) {}

  const std::string& name() const { return name_; }

  double value(const Vec& x) const { return value_(x); }
  double operator()(const Vec& x) const { return value_(x); }

  Vec gradient(const Vec& x) const {
    return gradient_ ? gradient_(x) : fd_gradient(x);
  }

  /// Finite-difference gradient regardless of whether an analytic one exists;
  /// used for cross-checks.
  Vec fd_gradient(const Vec& x) const { return fd::gradient(value_, x); }

  bool has_analytic_gradient() const { return static_cast<bool>(gradient_); }

  /// Constant field c (gradient identically zero).
  static ScalarField constant(double c, const std::string& name = "const") {
    return ScalarField(name, [c](const Vec&) { return c; },
                       [](const Vec& x) { return Vec(Vec::Zero(x.size())); });
  }

  /// The i-th coordinate function.
  static ScalarField coordinate(Eigen::Index i, const std::string& name) {
    return ScalarField(
        name, [i](const Vec& x) { return x[i]; },
        [i](const Vec& x) {
          Vec g = Vec::Zero(x.size());
          g[i] = 1.0;
          return g;
        });
  }

private:
  std::string name_;
  ValueFn value_;
  GradientFn gradient_;
};

}  // namespace contactlab

#endif
