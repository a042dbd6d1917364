#include "contactlab/reduction.hpp"

#include <Eigen/LU>
#include <sstream>

namespace contactlab {

ConstraintSet::ConstraintSet(std::vector<ScalarField> constraints)
    : constraints_(std::move(constraints)) {
  if (constraints_.empty() || constraints_.size() % 2 != 0) {
    throw ValidationError("constraint set must contain an even, positive number of fields");
  }
}

DiracData check_admissible(const EmbeddedContactManifold& M, const ConstraintSet& G,
                           const Vec& x) {
  // x must lie on N = M cap {G = 0}.
  M.require_on_manifold(x);
  for (const auto& g : G.constraints()) {
    if (std::abs(g.value(x)) >= M.tolerances().on_manifold) {
      throw OffManifold("point does not satisfy constraint " + g.name());
    }
  }

  DiracData data;
  data.base = x;
  data.frame = M.point_frame(x);

  const Eigen::Index k2 = G.count();
  const auto& gs = G.constraints();

  // Contact Hamiltonian fields of the constraints, reused for every entry.
  std::vector<Vec> YG(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i)
    YG[i] = contact_hamiltonian_field(data.frame, gs[i]);

  data.gram.resize(k2, k2);
  for (Eigen::Index i = 0; i < k2; ++i) {
    data.gram(i, i) = 0.0;
    const double zi = gs[i].gradient(x).dot(data.frame.reeb);
    for (Eigen::Index j = 0; j < k2; ++j) {
      if (i == j) continue;
      // [G_i, G_j] = Y_{G_i}(G_j) - G_j Z(G_i)
      data.gram(i, j) = gs[j].gradient(x).dot(YG[i]) - gs[j].value(x) * zi;
    }
  }

  data.tangency_defects.resize(k2);
  for (Eigen::Index j = 0; j < k2; ++j) {
    // [1, G_j] = Z(G_j)
    data.tangency_defects[j] = gs[j].gradient(x).dot(data.frame.reeb);
  }
  data.tangent_reeb =
      data.tangency_defects.cwiseAbs().maxCoeff() < M.tolerances().residual;

  Eigen::FullPivLU<Mat> lu(data.gram);
  const double det = lu.determinant();
  if (std::abs(det) <= M.tolerances().rank) {
    std::ostringstream os;
    os << "|det gram| = " << std::abs(det) << "; not a contact submanifold point";
    throw GramSingular(os.str());
  }
  data.gram_inverse = lu.inverse();
  return data;
}

Vec dirac_multipliers(const DiracData& data, const ConstraintSet& G, const ScalarField& f) {
  const Eigen::Index k2 = G.count();
  const auto& gs = G.constraints();
  const Vec Yf = contact_hamiltonian_field(data.frame, f);
  const double zf = f.gradient(data.base).dot(data.frame.reeb);

  Vec rhs(k2);
  for (Eigen::Index j = 0; j < k2; ++j)
    rhs[j] = gs[j].gradient(data.base).dot(Yf) - gs[j].value(data.base) * zf;

  // sum_i lambda_i gram(i,j) = rhs_j  <=>  gram^T lambda = rhs.
  Vec lambda = Eigen::PartialPivLU<Mat>(data.gram.transpose()).solve(rhs);
  const double res = (data.gram.transpose() * lambda - rhs).norm();
  if (!(res < 1e-8 * (1.0 + rhs.norm()))) {
    throw GramSingular("multiplier system residual too large");
  }
  return lambda;
}

Vec dirac_multipliers(const EmbeddedContactManifold& M, const ConstraintSet& G,
                      const Vec& x, const ScalarField& f) {
  return dirac_multipliers(check_admissible(M, G, x), G, f);
}

Vec constrained_field(const DiracData& data, const ConstraintSet& G, const ScalarField& f) {
  if (!data.tangent_reeb) {
    throw NotTangentReeb("Reeb field is not tangent to N; use general_restricted_bracket");
  }
  const Vec lambda = dirac_multipliers(data, G, f);
  Vec W = contact_hamiltonian_field(data.frame, f);
  for (Eigen::Index i = 0; i < G.count(); ++i)
    W -= lambda[i] * contact_hamiltonian_field(data.frame, G.constraints()[i]);
  return W;
}

Vec constrained_field(const EmbeddedContactManifold& M, const ConstraintSet& G,
                      const Vec& x, const ScalarField& f) {
  return constrained_field(check_admissible(M, G, x), G, f);
}

double restricted_bracket(const DiracData& data, const ConstraintSet& G,
                          const ScalarField& f, const ScalarField& g) {
  const Vec lambda = dirac_multipliers(data, G, f);
  double val = jacobi_bracket(data.frame, f, g);
  for (Eigen::Index i = 0; i < G.count(); ++i)
    val -= lambda[i] * jacobi_bracket(data.frame, G.constraints()[i], g);
  return val;
}

double restricted_bracket(const EmbeddedContactManifold& M, const ConstraintSet& G,
                          const Vec& x, const ScalarField& f, const ScalarField& g) {
  return restricted_bracket(check_admissible(M, G, x), G, f, g);
}

double general_restricted_bracket(const EmbeddedContactManifold& M, const ConstraintSet& G,
                                  const Vec& x, const ScalarField& f, const ScalarField& g) {
  const DiracData data = check_admissible(M, G, x);
  const Vec lambda = dirac_multipliers(data, G, f);

  // Z* is the Reeb field of (N, j*alpha), computed intrinsically.
  const EmbeddedContactManifold N = intrinsic_submanifold(M, G);
  const Vec z_star = N.point_frame(x).reeb;

  const Vec df = f.gradient(x);
  const Vec dg = g.gradient(x);
  const double fx = f.value(x);
  const double gx = g.value(x);
  const double zf = df.dot(data.frame.reeb);
  const double zg = dg.dot(data.frame.reeb);

  double val = jacobi_bracket(data.frame, f, g);
  val += gx * zf - fx * zg + fx * dg.dot(z_star) - gx * df.dot(z_star);
  for (Eigen::Index i = 0; i < G.count(); ++i) {
    const Vec YGi = contact_hamiltonian_field(data.frame, G.constraints()[i]);
    val -= lambda[i] * dg.dot(YGi);
  }
  return val;
}

EmbeddedContactManifold intrinsic_submanifold(const EmbeddedContactManifold& M,
                                              const ConstraintSet& G) {
  std::vector<ScalarField> all = M.constraints();
  for (const auto& g : G.constraints()) all.push_back(g);
  return EmbeddedContactManifold(M.ambient_dim(), std::move(all), M.contact_form(),
                                 M.tolerances());
}

}  // namespace contactlab
