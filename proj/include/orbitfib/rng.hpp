#ifndef ORBITFIB_RNG_HPP
#define ORBITFIB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "orbitfib/liealg.hpp"

namespace orbitfib {

/// Deterministic sampler: mt19937_64 plus an explicit Box-Muller transform,
/// so seeded runs reproduce byte-identically across standard libraries
/// (std::normal_distribution is implementation-defined).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  Complex cnormal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) * M_SQRT1_2;
  }

  Matrix gaussian_matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }

  /// Random traceless element with entries of magnitude ~scale.
  AlgebraElement traceless(int n, double scale = 1.0) {
    Matrix m = scale * gaussian_matrix(n, n);
    m -= (m.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
    return AlgebraElement(std::move(m));
  }

  /// Random anti-Hermitian traceless element (a compact direction).
  AlgebraElement anti_hermitian_traceless(int n, double scale = 1.0) {
    Matrix g = scale * gaussian_matrix(n, n);
    Matrix m = 0.5 * (g - g.conjugate().transpose());
    m -= (m.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
    return AlgebraElement(std::move(m));
  }

  /// Real diagonal with pairwise gaps above min_gap, centred to sum zero.
  CartanElement real_regular_cartan(int n, double min_gap = 0.1) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::vector<double> d(static_cast<std::size_t>(n));
      double sum = 0.0;
      for (double& v : d) {
        v = uniform(-2.0, 2.0);
        sum += v;
      }
      for (double& v : d) v -= sum / n;
      CartanElement h = CartanElement::from_reals(d);
      if (is_regular(h, min_gap)) return h;
    }
    throw std::runtime_error("real_regular_cartan: no regular sample found");
  }

  /// Complex diagonal with pairwise gaps above min_gap, centred to sum zero.
  CartanElement complex_regular_cartan(int n, double min_gap = 0.1) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      CVector d(n);
      for (int k = 0; k < n; ++k) d(k) = Complex(uniform(-2.0, 2.0), uniform(-2.0, 2.0));
      d.array() -= d.sum() / static_cast<double>(n);
      CartanElement h{CVector(d)};
      if (is_regular(h, min_gap)) return h;
    }
    throw std::runtime_error("complex_regular_cartan: no regular sample found");
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace orbitfib

#endif
