#ifndef CONTACTLAB_GEOMETRY_HPP
#define CONTACTLAB_GEOMETRY_HPP

#include <utility>

#include "contactlab/manifold.hpp"

namespace contactlab {

/// Splits a tangent vector X into its Reeb component and horizontal part,
/// X = alpha(X) Z + X_hat. Throws NotTangent when X is not tangent at the
/// frame's base point.
std::pair<double, Vec> decompose(const PointFrame& frame, const Vec& X,
                                 double residual_tol = 1e-8);

/// Inverse of the horizontal isomorphism X -> -i_X dalpha: returns the unique
/// horizontal v with dalpha(v, h) = -eta_hat(h) for all horizontal h, where
/// eta_hat is the semi-basic part of eta. Solved through omega_h.
Vec alpha_sharp(const PointFrame& frame, const Vec& eta);

/// Contact Hamiltonian vector field Y_f = f Z + alpha_sharp(df) at x.
Vec contact_hamiltonian_field(const EmbeddedContactManifold& M, const Vec& x,
                              const ScalarField& f);
Vec contact_hamiltonian_field(const PointFrame& frame, const ScalarField& f);

/// Jacobi bracket [f,g] = Y_f(g) - g Z(f).
double jacobi_bracket(const EmbeddedContactManifold& M, const Vec& x,
                      const ScalarField& f, const ScalarField& g);
double jacobi_bracket(const PointFrame& frame, const ScalarField& f,
                      const ScalarField& g);

/// The dalpha form of the same bracket, dalpha(Y_f,Y_g) + f Z(g) - g Z(f);
/// used as a consistency oracle against jacobi_bracket.
double jacobi_bracket_dalpha_form(const PointFrame& frame, const ScalarField& f,
                                  const ScalarField& g);

/// Canonical Poisson bracket on a flat symplectic ambient space with
/// interleaved coordinates (q_i at slot 2i, p_i at slot 2i+1):
///   {F,G} = sum_i dF/dq_i dG/dp_i - dF/dp_i dG/dq_i.
double canonical_poisson(const Vec& x, const ScalarField& F, const ScalarField& G);

/// Hamiltonian vector field of H for omega = dp ^ dq on the interleaved
/// layout: X_H = (dH/dp_i, -dH/dq_i).
Vec symplectic_gradient(const Vec& x, const ScalarField& H);

}  // namespace contactlab

#endif
