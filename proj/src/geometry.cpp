#include "contactlab/geometry.hpp"

#include <Eigen/LU>
#include <sstream>

namespace contactlab {

std::pair<double, Vec> decompose(const PointFrame& frame, const Vec& X, double residual_tol) {
  const Mat& T = frame.tangent_basis;
  const double off = (X - T * (T.transpose() * X)).norm();
  if (!(off < residual_tol * (1.0 + X.norm()))) {
    std::ostringstream os;
    os << "vector lies off the tangent space by " << off;
    throw NotTangent(os.str());
  }
  const double vertical = frame.pair_alpha(X);
  return {vertical, X - vertical * frame.reeb};
}

Vec alpha_sharp(const PointFrame& frame, const Vec& eta) {
  // Semi-basic part per the covector decomposition eta = eta(Z) alpha + eta_hat.
  const Vec eta_hat = eta - eta.dot(frame.reeb) * frame.alpha;
  const Mat& H = frame.horizontal_basis;
  const Vec r = H.transpose() * eta_hat;
  // dalpha(v, h_j) = -eta_hat(h_j) with v = H w reads (omega_h^T w)_j = -r_j.
  Eigen::PartialPivLU<Mat> lu(frame.omega_h.transpose());
  const Vec w = lu.solve(-r);
  if (((frame.omega_h.transpose() * w) + r).norm() > 1e-8 * (1.0 + r.norm())) {
    throw DegenerateContact("omega_h solve failed");
  }
  return H * w;
}

Vec contact_hamiltonian_field(const PointFrame& frame, const ScalarField& f) {
  return f.value(frame.base) * frame.reeb + alpha_sharp(frame, f.gradient(frame.base));
}

Vec contact_hamiltonian_field(const EmbeddedContactManifold& M, const Vec& x,
                              const ScalarField& f) {
  return contact_hamiltonian_field(M.point_frame(x), f);
}

double jacobi_bracket(const PointFrame& frame, const ScalarField& f, const ScalarField& g) {
  const Vec Yf = contact_hamiltonian_field(frame, f);
  const double zf = f.gradient(frame.base).dot(frame.reeb);
  return g.gradient(frame.base).dot(Yf) - g.value(frame.base) * zf;
}

double jacobi_bracket(const EmbeddedContactManifold& M, const Vec& x, const ScalarField& f,
                      const ScalarField& g) {
  return jacobi_bracket(M.point_frame(x), f, g);
}

double jacobi_bracket_dalpha_form(const PointFrame& frame, const ScalarField& f,
                                  const ScalarField& g) {
  const Vec Yf = contact_hamiltonian_field(frame, f);
  const Vec Yg = contact_hamiltonian_field(frame, g);
  const double zf = f.gradient(frame.base).dot(frame.reeb);
  const double zg = g.gradient(frame.base).dot(frame.reeb);
  return frame.pair_dalpha(Yf, Yg) + f.value(frame.base) * zg - g.value(frame.base) * zf;
}

double canonical_poisson(const Vec& x, const ScalarField& F, const ScalarField& G) {
  if (x.size() % 2 != 0) throw DimensionMismatch("canonical bracket needs even dimension");
  const Vec dF = F.gradient(x);
  const Vec dG = G.gradient(x);
  double s = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); i += 2)
    s += dF[i] * dG[i + 1] - dF[i + 1] * dG[i];
  return s;
}

Vec symplectic_gradient(const Vec& x, const ScalarField& H) {
  if (x.size() % 2 != 0) throw DimensionMismatch("symplectic gradient needs even dimension");
  const Vec dH = H.gradient(x);
  Vec X(x.size());
  for (Eigen::Index i = 0; i + 1 < x.size(); i += 2) {
    X[i] = dH[i + 1];
    X[i + 1] = -dH[i];
  }
  return X;
}

}  // namespace contactlab
