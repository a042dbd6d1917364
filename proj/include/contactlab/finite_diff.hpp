#ifndef CONTACTLAB_FINITE_DIFF_HPP
#define CONTACTLAB_FINITE_DIFF_HPP

#include <cmath>
#include <functional>
#include <limits>

#include "contactlab/types.hpp"

namespace contactlab::fd {

/// Per-coordinate central-difference step: h = cbrt(eps) * max(1, |xi|).
inline double step(double xi) {
  static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  return h0 * std::max(1.0, std::abs(xi));
}

/// Central-difference gradient of a scalar function.
inline Vec gradient(const std::function<double(const Vec&)>& f, const Vec& x) {
  Vec g(x.size());
  Vec xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double h = step(x[i]);
    const double xi = x[i];
    xp[i] = xi + h;
    const double fp = f(xp);
    xp[i] = xi - h;
    const double fm = f(xp);
    xp[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

/// Central-difference Jacobian of a vector function, J(i,j) = d v_j / d x_i.
inline Mat jacobian_by_rows(const std::function<Vec(const Vec&)>& v, const Vec& x) {
  const Eigen::Index n = x.size();
  Mat J(n, v(x).size());
  Vec xp = x;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double h = step(x[i]);
    const double xi = x[i];
    xp[i] = xi + h;
    const Vec vp = v(xp);
    xp[i] = xi - h;
    const Vec vm = v(xp);
    xp[i] = xi;
    J.row(i) = ((vp - vm) / (2.0 * h)).transpose();
  }
  return J;
}

}  // namespace contactlab::fd

#endif
