#ifndef ORBITFIB_LIEALG_HPP
#define ORBITFIB_LIEALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace orbitfib {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace tol {
// Absolute tolerances scale with 1 + max|entry| of the inputs.
inline constexpr double structural = 1e-9;
inline constexpr double rank_rel = 1e-8;
inline constexpr double trace = 1e-12;
inline constexpr double omega_nondeg = 1e-10;

inline double scaled(double base, double magnitude) { return base * (1.0 + magnitude); }
}  // namespace tol

/// Traceless n x n complex matrix: the ambient object for orbit points,
/// tangent vectors and brackets.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Matrix entries);

  static AlgebraElement zero(int n);

  const Matrix& mat() const { return m_; }
  int n() const { return static_cast<int>(m_.rows()); }
  double max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }
  double frobenius() const { return m_.norm(); }

 private:
  Matrix m_;
};

/// Diagonal traceless element, stored as the n-vector of diagonal entries.
class CartanElement {
 public:
  CartanElement() = default;
  explicit CartanElement(CVector diag);

  static CartanElement from_reals(const std::vector<double>& entries);
  static CartanElement from_complex(const std::vector<Complex>& entries);
  static CartanElement zero(int n);

  const CVector& diag() const { return d_; }
  int n() const { return static_cast<int>(d_.size()); }
  /// Membership in the real form h_R (all diagonal entries real).
  bool is_real(double imag_tol = 1e-12) const;
  AlgebraElement embed() const;
  double max_abs() const { return d_.size() == 0 ? 0.0 : d_.cwiseAbs().maxCoeff(); }

 private:
  CVector d_;
};

/// Root functional a |-> a_i - a_j (indices 0-based, i != j), with root
/// vector the elementary matrix E_ij.
struct Root {
  int i = 0;
  int j = 0;

  Complex eval(const CartanElement& d) const { return d.diag()(i) - d.diag()(j); }
  AlgebraElement vector(int n) const;
};

/// Scaling constant of the invariant trace form c * tr(XY).  c = 1 is the
/// plain trace form; c = 2n recovers the Cartan-Killing normalization.
class FormConfig {
 public:
  FormConfig() = default;
  explicit FormConfig(double c);

  double c() const { return c_; }
  static FormConfig killing(int n) { return FormConfig(2.0 * n); }

 private:
  double c_ = 1.0;
};

// --- core operations ---------------------------------------------------

AlgebraElement bracket(const AlgebraElement& X, const AlgebraElement& Y);

/// Invariant bilinear form <X,Y> = c * tr(XY).
Complex trace_form(const AlgebraElement& X, const AlgebraElement& Y, const FormConfig& cfg);

/// tr(ad(X) ad(Y)) computed from the adjoint matrices over a basis of the
/// algebra.  Independent route for the trace form with c = 2n.
Complex killing_form_via_ad(const AlgebraElement& X, const AlgebraElement& Y);

/// Conjugation fixing the compact real form su(n): tau(Z) = -conj(Z)^T.
AlgebraElement tau(const AlgebraElement& Z);

/// Hermitian form H_tau(X,Y) = -<X, tau Y>; with c = 1 this is
/// tr(X conj(Y)^T), positive definite.
Complex hermitian_form(const AlgebraElement& X, const AlgebraElement& Y, const FormConfig& cfg);

/// Norm induced by the Hermitian form.
double hermitian_norm(const AlgebraElement& X, const FormConfig& cfg);

/// Symplectic form on the realification: the imaginary part of H_tau.
double omega_form(const AlgebraElement& X, const AlgebraElement& Y, const FormConfig& cfg);

/// True iff all pairwise differences of the diagonal entries exceed tol.
bool is_regular(const CartanElement& H, double tol = tol::structural);

/// All n(n-1) roots of sl(n), ordered pairs (i,j), i != j.
std::vector<Root> all_roots(int n);

/// Projection killing the diagonal (the root-space component of X).
AlgebraElement offdiag_projection(const AlgebraElement& X);

// --- basis and adjoint-matrix helpers ----------------------------------

/// Basis of sl(n): the E_ij (i != j, row-major order) followed by the
/// diagonal differences E_kk - E_(k+1)(k+1).
std::vector<AlgebraElement> sl_basis(int n);

/// Coordinates of a traceless matrix in sl_basis(n).
CVector sl_coords(const Matrix& X);

/// The (n^2-1) x (n^2-1) matrix of ad(X) in sl_basis coordinates.
Matrix ad_matrix(const AlgebraElement& X);

/// Operator norm of ad(H) for diagonal H: max over roots of |alpha(H)|.
double ad_operator_norm(const CartanElement& H);

/// Monic characteristic polynomial coefficients (c_1, ..., c_n) with
/// p(s) = s^n + c_1 s^(n-1) + ... + c_n, via the Faddeev-LeVerrier
/// recursion (no eigensolver).
CVector charpoly_coeffs(const Matrix& A);

/// Scaled max deviation of charpoly coefficients from a reference.
double charpoly_drift_from(const Matrix& x, const CVector& reference_coeffs);

void require_same_dim(const AlgebraElement& X, const AlgebraElement& Y);

}  // namespace orbitfib

#endif
