#ifndef CONTACTLAB_ONE_FORM_HPP
#define CONTACTLAB_ONE_FORM_HPP

#include <functional>
#include <utility>

#include "contactlab/finite_diff.hpp"
#include "contactlab/types.hpp"

namespace contactlab {

/// A one-form on ambient space, given by its coefficient covector. The
/// exterior derivative is returned as the antisymmetric matrix A with
/// A(i,j) = d_i alpha_j - d_j alpha_i, so that  dalpha(u, v) = u^T A v.
class OneFormField {
public:
  using CoefficientFn = std::function<Vec(const Vec&)>;
  using DerivativeFn = std::function<Mat(const Vec&)>;

  OneFormField() = default;

  explicit OneFormField(CoefficientFn coefficients)
      : coefficients_(std::move(coefficients)) {}

  OneFormField(CoefficientFn coefficients, DerivativeFn exterior_derivative)
      : coefficients_(std::move(coefficients)),
        exterior_derivative_(std::move(exterior_derivative)) {}

  Vec coefficients(const Vec& x) const { return coefficients_(x); }

  Mat exterior_derivative(const Vec& x) const {
    return exterior_derivative_ ? exterior_derivative_(x) : fd_exterior_derivative(x);
  }

  /// Finite differences of the coefficients, antisymmetrized explicitly so the
  /// symmetric O(h) noise cancels.
  Mat fd_exterior_derivative(const Vec& x) const {
    Mat J = fd::jacobian_by_rows(coefficients_, x);
    return J - J.transpose();
  }

  bool has_analytic_derivative() const { return static_cast<bool>(exterior_derivative_); }

  double pair(const Vec& x, const Vec& v) const { return coefficients_(x).dot(v); }

private:
  CoefficientFn coefficients_;
  DerivativeFn exterior_derivative_;
};

}  // namespace contactlab

#endif
