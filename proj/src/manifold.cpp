#include "contactlab/manifold.hpp"

#include <Eigen/SVD>
#include <sstream>

namespace contactlab {

namespace {

/// Deterministic orthonormal completion: projects the coordinate directions
/// e_0, e_1, ... onto the orthogonal complement of the columns of `fixed`,
/// then runs modified Gram-Schmidt in coordinate order, keeping the first
/// `want` directions that survive. Two passes of re-orthogonalization keep
/// the result orthonormal to machine precision.
Mat complete_basis(const Mat& fixed, Eigen::Index want, double drop_tol) {
  const Eigen::Index D = fixed.rows();
  Mat out(D, want);
  Eigen::Index got = 0;
  for (Eigen::Index i = 0; i < D && got < want; ++i) {
    Vec v = Vec::Zero(D);
    v[i] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      v -= fixed * (fixed.transpose() * v);
      v -= out.leftCols(got) * (out.leftCols(got).transpose() * v);
    }
    const double n = v.norm();
    if (n > drop_tol) out.col(got++) = v / n;
  }
  if (got < want) {
    throw RankDeficient("basis completion stalled; subspace dimension mismatch");
  }
  return out;
}

}  // namespace

EmbeddedContactManifold::EmbeddedContactManifold(Eigen::Index ambient_dim,
                                                 std::vector<ScalarField> defining_constraints,
                                                 OneFormField contact_form,
                                                 Tolerances tol)
    : ambient_dim_(ambient_dim),
      constraints_(std::move(defining_constraints)),
      form_(std::move(contact_form)),
      dim_(ambient_dim - static_cast<Eigen::Index>(constraints_.size())),
      tol_(tol) {
  if (dim_ < 1 || dim_ % 2 == 0) {
    std::ostringstream os;
    os << "contact manifold dimension must be odd and positive, got " << dim_;
    throw DimensionMismatch(os.str());
  }
}

Vec EmbeddedContactManifold::constraint_values(const Vec& x) const {
  Vec c(static_cast<Eigen::Index>(constraints_.size()));
  for (std::size_t i = 0; i < constraints_.size(); ++i) c[i] = constraints_[i].value(x);
  return c;
}

Mat EmbeddedContactManifold::constraint_jacobian(const Vec& x) const {
  Mat J(static_cast<Eigen::Index>(constraints_.size()), ambient_dim_);
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    J.row(i) = constraints_[i].gradient(x).transpose();
  return J;
}

bool EmbeddedContactManifold::on_manifold(const Vec& x, double slack) const {
  if (x.size() != ambient_dim_) return false;
  return constraint_values(x).cwiseAbs().maxCoeff() < tol_.on_manifold * slack;
}

void EmbeddedContactManifold::require_on_manifold(const Vec& x, double slack) const {
  if (x.size() != ambient_dim_) {
    throw DimensionMismatch("point has wrong ambient dimension");
  }
  if (!on_manifold(x, slack)) {
    std::ostringstream os;
    os << "max |constraint| = " << constraint_values(x).cwiseAbs().maxCoeff()
       << " exceeds " << tol_.on_manifold * slack;
    throw OffManifold(os.str());
  }
}

Mat EmbeddedContactManifold::tangent_basis(const Vec& x) const {
  const Mat J = constraint_jacobian(x);

  // Full-rank check on the Jacobian via its singular values.
  Eigen::JacobiSVD<Mat> svd(J);
  if (svd.singularValues().minCoeff() <= tol_.rank) {
    throw RankDeficient("constraint Jacobian is rank deficient at this point");
  }

  // Orthonormalize the rows (row order fixed), then complete deterministically.
  const Eigen::Index k = J.rows();
  Mat R(ambient_dim_, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    Vec v = J.row(i).transpose();
    for (int pass = 0; pass < 2; ++pass)
      v -= R.leftCols(i) * (R.leftCols(i).transpose() * v);
    const double n = v.norm();
    if (n <= tol_.rank) throw RankDeficient("constraint gradients are linearly dependent");
    R.col(i) = v / n;
  }
  return complete_basis(R, dim_, 0.1);
}

PointFrame EmbeddedContactManifold::point_frame(const Vec& x, double on_manifold_slack) const {
  require_on_manifold(x, on_manifold_slack);

  PointFrame fr;
  fr.base = x;
  fr.tangent_basis = tangent_basis(x);
  fr.alpha = form_.coefficients(x);
  fr.dalpha = form_.exterior_derivative(x);

  const Mat& T = fr.tangent_basis;
  const Eigen::Index d = dim_;

  // Reeb: overdetermined (consistent) system  alpha(v) = 1, dalpha(v, b_i) = 0
  // over tangent coordinates, solved by least squares. A large residual means
  // the point is not a contact point of the model.
  Mat A(d + 1, d);
  A.row(0) = (fr.alpha.transpose() * T);
  for (Eigen::Index i = 0; i < d; ++i)
    A.row(i + 1) = (T.transpose() * (fr.dalpha * T.col(i))).transpose();
  Vec rhs = Vec::Zero(d + 1);
  rhs[0] = 1.0;
  Vec c = A.colPivHouseholderQr().solve(rhs);
  fr.reeb_residual = (A * c - rhs).norm();
  if (!(fr.reeb_residual < tol_.residual)) {
    std::ostringstream os;
    os << "Reeb defining system residual " << fr.reeb_residual;
    throw DegenerateContact(os.str());
  }
  fr.reeb = T * c;

  // Horizontal basis: ker(alpha) within the tangent space, built by the same
  // deterministic completion in tangent coordinates.
  Vec aT = T.transpose() * fr.alpha;
  const double an = aT.norm();
  if (an <= tol_.rank) throw DegenerateContact("contact form vanishes on the tangent space");
  Mat K = complete_basis(aT / an, d - 1, 0.1);
  fr.horizontal_basis = T * K;

  const Mat& H = fr.horizontal_basis;
  fr.omega_h = H.transpose() * fr.dalpha * H;
  const double det = fr.omega_h.determinant();
  if (std::abs(det) <= tol_.rank) {
    std::ostringstream os;
    os << "dalpha degenerate on the horizontal subspace (|det| = " << std::abs(det) << ")";
    throw DegenerateContact(os.str());
  }
  return fr;
}

Vec EmbeddedContactManifold::project(const Vec& y, int max_iter) const {
  if (y.size() != ambient_dim_) throw DimensionMismatch("point has wrong ambient dimension");
  Vec x = y;
  for (int it = 0; it < max_iter; ++it) {
    Vec c = constraint_values(x);
    if (c.cwiseAbs().maxCoeff() < tol_.projection) return x;
    Mat J = constraint_jacobian(x);
    // Gauss-Newton step of minimum norm: x <- x - J^T (J J^T)^{-1} c.
    Mat JJt = J * J.transpose();
    Eigen::LDLT<Mat> ldlt(JJt);
    if (ldlt.info() != Eigen::Success) throw NoConvergence("normal equations singular");
    x -= J.transpose() * ldlt.solve(c);
  }
  throw NoConvergence("Gauss-Newton projection did not reach tolerance");
}

}  // namespace contactlab
