#ifndef CONTACTLAB_TYPES_HPP
#define CONTACTLAB_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>

namespace contactlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Numerical thresholds shared across the library. Values may be overridden
/// per run through the scenario file.
struct Tolerances {
  double on_manifold = 1e-8;    // max |constraint| for a point to count as on-manifold
  double projection = 1e-12;    // Gauss-Newton constraint target
  double residual = 1e-8;       // linear-solve / identity residuals
  double rank = 1e-10;          // singular-value / determinant floor
  double fd_crosscheck = 1e-6;  // analytic vs finite-difference gradient agreement
};

/// Deterministic 64-bit stream used everywhere randomness is needed.
/// Keeping the generator self-contained pins output sequences across
/// platforms and standard-library versions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in (0,1).
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform();
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Vec next_gaussian_vec(Eigen::Index n) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = next_gaussian();
    return v;
  }

  /// Independent child stream; hash(seed, index) rule for per-task RNGs.
  static Rng child(std::uint64_t global_seed, std::uint64_t index) {
    Rng mix(global_seed ^ (0xd1b54a32d192ed03ull * (index + 1)));
    mix.next_u64();
    return Rng(mix.next_u64());
  }

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace contactlab

#endif
