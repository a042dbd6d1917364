#ifndef CONTACTLAB_MANIFOLD_HPP
#define CONTACTLAB_MANIFOLD_HPP

#include <string>
#include <vector>

#include "contactlab/errors.hpp"
#include "contactlab/one_form.hpp"
#include "contactlab/scalar_field.hpp"
#include "contactlab/types.hpp"

namespace contactlab {

/// Per-point geometric package: orthonormal tangent basis, Reeb vector,
/// horizontal basis spanning ker(alpha) inside the tangent space, and the
/// matrix of dalpha on that horizontal basis.
struct PointFrame {
  Vec base;
  Mat tangent_basis;     // D x dim, orthonormal columns
  Vec reeb;              // Z, tangent, alpha(Z)=1, dalpha(Z,.)=0
  Mat horizontal_basis;  // D x (dim-1), orthonormal columns, alpha(h)=0
  Mat omega_h;           // (dim-1) x (dim-1), omega_h(i,j) = dalpha(h_i, h_j)
  Vec alpha;             // contact-form coefficients at base
  Mat dalpha;            // exterior derivative matrix at base
  double reeb_residual = 0.0;

  Eigen::Index ambient_dim() const { return base.size(); }
  Eigen::Index dim() const { return tangent_basis.cols(); }

  double pair_alpha(const Vec& v) const { return alpha.dot(v); }
  double pair_dalpha(const Vec& u, const Vec& v) const { return u.dot(dalpha * v); }
};

/// A manifold embedded in R^D as the common zero set of constraint fields,
/// carrying a contact form defined on the ambient space.
class EmbeddedContactManifold {
public:
  EmbeddedContactManifold(Eigen::Index ambient_dim,
                          std::vector<ScalarField> defining_constraints,
                          OneFormField contact_form,
                          Tolerances tol = {});

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return dim_; }
  const std::vector<ScalarField>& constraints() const { return constraints_; }
  const OneFormField& contact_form() const { return form_; }
  const Tolerances& tolerances() const { return tol_; }
  void set_tolerances(const Tolerances& t) { tol_ = t; }

  /// Stacked constraint values at x.
  Vec constraint_values(const Vec& x) const;

  /// Constraint Jacobian; row i is the gradient of constraint i.
  Mat constraint_jacobian(const Vec& x) const;

  bool on_manifold(const Vec& x, double slack = 1.0) const;
  void require_on_manifold(const Vec& x, double slack = 1.0) const;

  /// Orthonormal basis of the null space of the constraint Jacobian,
  /// deterministic for fixed x (coordinate-order pivoting).
  Mat tangent_basis(const Vec& x) const;

  /// Full frame: tangent basis, least-squares Reeb solve, horizontal basis
  /// and the dalpha matrix on it.
  PointFrame point_frame(const Vec& x, double on_manifold_slack = 1.0) const;

  /// Gauss-Newton projection onto the constraint zero set.
  Vec project(const Vec& y, int max_iter = 64) const;

private:
  Eigen::Index ambient_dim_;
  std::vector<ScalarField> constraints_;
  OneFormField form_;
  Eigen::Index dim_;
  Tolerances tol_;
};

}  // namespace contactlab

#endif
