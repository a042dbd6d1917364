#ifndef CONTACTLAB_REDUCTION_HPP
#define CONTACTLAB_REDUCTION_HPP

#include <vector>

#include "contactlab/geometry.hpp"
#include "contactlab/manifold.hpp"

namespace contactlab {

/// Ordered, even-sized list of constraint fields G_1..G_2k cutting a
/// submanifold N out of a parent contact manifold M.
class ConstraintSet {
public:
  explicit ConstraintSet(std::vector<ScalarField> constraints);

  const std::vector<ScalarField>& constraints() const { return constraints_; }
  Eigen::Index count() const { return static_cast<Eigen::Index>(constraints_.size()); }

private:
  std::vector<ScalarField> constraints_;
};

/// Point data for the reduction: the Gram matrix of pairwise Jacobi brackets,
/// its inverse, and the Reeb-tangency defects [1, G_j].
struct DiracData {
  Vec base;
  Mat gram;               // gram(i,j) = [G_i, G_j] on M
  Mat gram_inverse;       // inverse of gram
  Vec tangency_defects;   // [1, G_j]
  bool tangent_reeb = false;
  PointFrame frame;       // frame of the parent manifold at base
};

/// Admissibility check at x in N: Gram matrix invertible, Reeb tangency
/// measured. Throws GramSingular when the contact-submanifold criterion
/// fails at x.
DiracData check_admissible(const EmbeddedContactManifold& M, const ConstraintSet& G,
                           const Vec& x);

/// Multipliers lambda solving  sum_i lambda_i [G_i, G_j] = [f, G_j]  for all j.
Vec dirac_multipliers(const EmbeddedContactManifold& M, const ConstraintSet& G,
                      const Vec& x, const ScalarField& f);
Vec dirac_multipliers(const DiracData& data, const ConstraintSet& G, const ScalarField& f);

/// Projected field Y*_f = Y_f - sum_i lambda_i(f) Y_{G_i}; the contact
/// Hamiltonian field of f restricted to N when the Reeb field is tangent.
Vec constrained_field(const EmbeddedContactManifold& M, const ConstraintSet& G,
                      const Vec& x, const ScalarField& f);
Vec constrained_field(const DiracData& data, const ConstraintSet& G, const ScalarField& f);

/// Restricted Jacobi bracket in the tangent-Reeb case,
///   [f,g]_N = [f,g] - sum_i lambda_i(f) [G_i, g].
double restricted_bracket(const EmbeddedContactManifold& M, const ConstraintSet& G,
                          const Vec& x, const ScalarField& f, const ScalarField& g);
double restricted_bracket(const DiracData& data, const ConstraintSet& G,
                          const ScalarField& f, const ScalarField& g);

/// General restricted bracket, valid also when the Reeb field of M is not
/// tangent to N:
///   [f,g]_N = [f,g] + g Z(f) - f Z(g) + f Z*(g) - g Z*(f)
///             - sum_i lambda_i(f) Y_{G_i}(g),
/// where Z* is the Reeb field of (N, j*alpha) computed intrinsically.
double general_restricted_bracket(const EmbeddedContactManifold& M, const ConstraintSet& G,
                                  const Vec& x, const ScalarField& f, const ScalarField& g);

/// N viewed as an embedded contact manifold in its own right: the parent's
/// constraints plus G's, same contact form. Used as the independent oracle
/// for restricted_bracket.
EmbeddedContactManifold intrinsic_submanifold(const EmbeddedContactManifold& M,
                                              const ConstraintSet& G);

}  // namespace contactlab

#endif
