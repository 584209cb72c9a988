#include "orbitfib/symplectic.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "orbitfib/rng.hpp"

namespace orbitfib {

namespace {

SymplecticVerdict omega_gram_verdict(OrbitPoint point,
                                     const std::vector<AlgebraElement>& real_basis,
                                     const FormConfig& cfg) {
  const int dim = static_cast<int>(real_basis.size());
  SymplecticVerdict v;
  v.point = std::move(point);
  v.subspace_dim = dim;
  if (dim == 0) {
    v.nondegenerate = true;  // vacuous
    return v;
  }
  Eigen::MatrixXd gram(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      gram(a, b) = omega_form(real_basis[static_cast<std::size_t>(a)],
                              real_basis[static_cast<std::size_t>(b)], cfg);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
  v.gram_min_sv = svd.singularValues().minCoeff();
  v.nondegenerate = v.gram_min_sv > tol::omega_nondeg;
  return v;
}

CVector vec(const Matrix& m) { return Eigen::Map<const CVector>(m.data(), m.size()); }

}  // namespace

SymplecticVerdict omega_fibre_verdict(const OrbitPoint& x, const CartanElement& H,
                                      const FormConfig& cfg) {
  const TangentBasis fib = fibre_tangent_basis(x, H, cfg);  // throws if x singular
  return omega_gram_verdict(x, fib.realified(), cfg);
}

std::vector<Root> positive_roots_at(const CartanElement& w, double tol) {
  std::vector<Root> out;
  for (const Root& r : all_roots(w.n()))
    if (r.eval(w).real() > tol) out.push_back(r);
  return out;
}

SymplecticVerdict omega_affine_piece_verdict(const CartanElement& wH0, const FormConfig& cfg) {
  std::vector<AlgebraElement> real_basis;
  for (const Root& r : positive_roots_at(wH0)) {
    const AlgebraElement e = r.vector(wH0.n());
    real_basis.push_back(e);
    real_basis.push_back(AlgebraElement(Complex(0.0, 1.0) * e.mat()));
  }
  return omega_gram_verdict(make_orbit_point(wH0.embed(), wH0), real_basis, cfg);
}

Complex kks_form(const OrbitPoint& x, const AlgebraElement& A, const AlgebraElement& B,
                 const FormConfig& cfg) {
  require_same_dim(A, B);
  return trace_form(x.x, bracket(A, B), cfg);
}

double kks_degeneracy_witness(const OrbitPoint& x, const CartanElement& H,
                              const FormConfig& cfg) {
  const TangentBasis fib = fibre_tangent_basis(x, H, cfg);  // throws if x singular
  const int n = x.x.n();
  // Linear operator A |-> [x,A] on the full matrix space, for recovering
  // preimages of the fibre-tangent vectors.
  Matrix op(n * n, n * n);
  int col = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      op.col(col++) = vec(x.x.mat() * e - e * x.x.mat());
    }
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(op);

  const Matrix Hm = H.embed().mat();
  double witness = 0.0;
  for (const AlgebraElement& v : fib.vectors) {
    const CVector a = cod.solve(vec(v.mat()));
    const Matrix A = Eigen::Map<const Matrix>(a.data(), n, n);
    if ((x.x.mat() * A - A * x.x.mat() - v.mat()).norm() > 1e-8 * (1.0 + v.frobenius()))
      throw std::domain_error("kks_degeneracy_witness: failed to invert ad(x) on a tangent vector");
    const Complex pairing = cfg.c() * (x.x.mat() * (Hm * A - A * Hm)).trace();
    witness = std::max(witness, std::abs(pairing));
  }
  return witness;
}

LagrangianVerdict lagrangian_verdict_flag(const CartanElement& H0, int samples,
                                          std::uint64_t seed, const FormConfig& cfg) {
  if (!H0.is_real())
    throw std::invalid_argument("lagrangian_verdict_flag: H0 must be real diagonal");
  if (samples < 1) throw std::invalid_argument("lagrangian_verdict_flag: samples >= 1 required");
  const int n = H0.n();
  DetRng rng(seed);

  int nonzero_roots = 0;
  for (const Root& r : all_roots(n))
    if (std::abs(r.eval(H0)) > 1e-12) ++nonzero_roots;

  LagrangianVerdict v;
  v.description = "compact slice of the orbit (unitary conjugates of H0)";
  v.sample_count = samples;
  int orbit_complex_dim = 0;
  for (int k = 0; k < samples; ++k) {
    const AlgebraElement A = rng.anti_hermitian_traceless(n, rng.uniform(0.2, 1.2));
    const Matrix U = A.mat().exp();
    const Matrix Uinv = (-A.mat()).exp();
    const OrbitPoint S = make_orbit_point(AlgebraElement(U * H0.embed().mat() * Uinv), H0);
    if (k == 0) orbit_complex_dim = tangent_basis(S).complex_dim;
    const AlgebraElement B1 = rng.anti_hermitian_traceless(n);
    const AlgebraElement B2 = rng.anti_hermitian_traceless(n);
    const double w = std::abs(omega_form(bracket(S.x, B1), bracket(S.x, B2), cfg));
    v.max_abs_omega = std::max(v.max_abs_omega, w);
  }
  // Slice real dimension (count of nonvanishing roots) must be half the
  // orbit's real dimension 2 * complex_dim.
  v.dimension_check = nonzero_roots == orbit_complex_dim;
  v.is_lagrangian_numerically = v.max_abs_omega < 1e-10 && v.dimension_check;
  return v;
}

LagrangianVerdict lagrangian_verdict_thimble_sphere(int samples, const FormConfig& cfg) {
  if (samples < 1)
    throw std::invalid_argument("lagrangian_verdict_thimble_sphere: samples >= 1 required");
  // su(2) generators.
  Matrix u1(2, 2), u2(2, 2), u3(2, 2);
  u1 << Complex(0, 1), 0, 0, Complex(0, -1);
  u2 << 0, 1, -1, 0;
  u3 << 0, Complex(0, 1), Complex(0, 1), 0;
  const std::vector<Matrix> gen = {u1, u2, u3};

  LagrangianVerdict v;
  v.description = "sphere r^2+p^2+q^2 = 1 of traceless Hermitian matrices";
  v.sample_count = samples;
  v.dimension_check = true;
  const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < samples; ++k) {
    const double r = 1.0 - 2.0 * (k + 0.5) / samples;
    const double rho = std::sqrt(std::max(0.0, 1.0 - r * r));
    const double phi = golden_angle * k;
    const double p = rho * std::cos(phi);
    const double q = rho * std::sin(phi);
    Matrix S(2, 2);
    S << r, Complex(-p, q), Complex(-p, -q), -r;

    std::vector<Matrix> tangents;
    Eigen::MatrixXd realified(8, 3);
    for (int a = 0; a < 3; ++a) {
      const Matrix T = S * gen[static_cast<std::size_t>(a)] - gen[static_cast<std::size_t>(a)] * S;
      tangents.push_back(T);
      const CVector tv = vec(T);
      for (int row = 0; row < 4; ++row) {
        realified(2 * row, a) = tv(row).real();
        realified(2 * row + 1, a) = tv(row).imag();
      }
    }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const double w = std::abs(
            omega_form(AlgebraElement(tangents[static_cast<std::size_t>(a)]),
                       AlgebraElement(tangents[static_cast<std::size_t>(b)]), cfg));
        v.max_abs_omega = std::max(v.max_abs_omega, w);
      }
    // Tangent space of the sphere has real dimension 2 (half the orbit's 4).
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(realified);
    const auto& sigma = svd.singularValues();
    int rank = 0;
    for (int s = 0; s < sigma.size(); ++s)
      if (sigma(s) > tol::rank_rel * sigma(0)) ++rank;
    if (rank != 2) v.dimension_check = false;
  }
  v.is_lagrangian_numerically = v.max_abs_omega < 1e-10 && v.dimension_check;
  return v;
}

}  // namespace orbitfib
