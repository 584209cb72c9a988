#include "orbitfib/liealg.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitfib {

AlgebraElement::AlgebraElement(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("AlgebraElement: matrix must be square");
  if (m_.rows() < 2) throw std::invalid_argument("AlgebraElement: n >= 2 required");
  const double scale = m_.cwiseAbs().maxCoeff();
  if (std::abs(m_.trace()) > tol::scaled(tol::trace, scale))
    throw std::invalid_argument("AlgebraElement: matrix is not traceless");
}

AlgebraElement AlgebraElement::zero(int n) { return AlgebraElement(Matrix::Zero(n, n)); }

CartanElement::CartanElement(CVector diag) : d_(std::move(diag)) {
  if (d_.size() < 2) throw std::invalid_argument("CartanElement: n >= 2 required");
  const double scale = d_.cwiseAbs().maxCoeff();
  if (std::abs(d_.sum()) > tol::scaled(tol::trace, scale))
    throw std::invalid_argument("CartanElement: diagonal must sum to zero");
}

CartanElement CartanElement::from_reals(const std::vector<double>& entries) {
  CVector d(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t k = 0; k < entries.size(); ++k) d(static_cast<Eigen::Index>(k)) = entries[k];
  return CartanElement(std::move(d));
}

CartanElement CartanElement::from_complex(const std::vector<Complex>& entries) {
  CVector d(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t k = 0; k < entries.size(); ++k) d(static_cast<Eigen::Index>(k)) = entries[k];
  return CartanElement(std::move(d));
}

CartanElement CartanElement::zero(int n) { return CartanElement(CVector::Zero(n)); }

bool CartanElement::is_real(double imag_tol) const {
  return d_.imag().cwiseAbs().maxCoeff() <= imag_tol;
}

AlgebraElement CartanElement::embed() const {
  Matrix m = Matrix::Zero(n(), n());
  m.diagonal() = d_;
  return AlgebraElement(std::move(m));
}

AlgebraElement Root::vector(int n) const {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("Root: bad indices");
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  return AlgebraElement(std::move(m));
}

FormConfig::FormConfig(double c) : c_(c) {
  if (!(c > 0.0)) throw std::invalid_argument("FormConfig: c must be positive");
}

void require_same_dim(const AlgebraElement& X, const AlgebraElement& Y) {
  if (X.n() != Y.n()) throw std::invalid_argument("dimension mismatch");
}

AlgebraElement bracket(const AlgebraElement& X, const AlgebraElement& Y) {
  require_same_dim(X, Y);
  return AlgebraElement(X.mat() * Y.mat() - Y.mat() * X.mat());
}

Complex trace_form(const AlgebraElement& X, const AlgebraElement& Y, const FormConfig& cfg) {
  require_same_dim(X, Y);
  return cfg.c() * (X.mat() * Y.mat()).trace();
}

Complex killing_form_via_ad(const AlgebraElement& X, const AlgebraElement& Y) {
  require_same_dim(X, Y);
  return (ad_matrix(X) * ad_matrix(Y)).trace();
}

AlgebraElement tau(const AlgebraElement& Z) {
  return AlgebraElement(-Z.mat().conjugate().transpose());
}

Complex hermitian_form(const AlgebraElement& X, const AlgebraElement& Y, const FormConfig& cfg) {
  require_same_dim(X, Y);
  return -trace_form(X, tau(Y), cfg);
}

double hermitian_norm(const AlgebraElement& X, const FormConfig& cfg) {
  return std::sqrt(cfg.c()) * X.mat().norm();
}

double omega_form(const AlgebraElement& X, const AlgebraElement& Y, const FormConfig& cfg) {
  return hermitian_form(X, Y, cfg).imag();
}

bool is_regular(const CartanElement& H, double tol) {
  const CVector& d = H.diag();
  for (int i = 0; i < H.n(); ++i)
    for (int j = i + 1; j < H.n(); ++j)
      if (std::abs(d(i) - d(j)) <= tol) return false;
  return true;
}

std::vector<Root> all_roots(int n) {
  if (n < 2) throw std::invalid_argument("all_roots: n >= 2 required");
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) roots.push_back(Root{i, j});
  return roots;
}

AlgebraElement offdiag_projection(const AlgebraElement& X) {
  Matrix m = X.mat();
  m.diagonal().setZero();
  return AlgebraElement(std::move(m));
}

std::vector<AlgebraElement> sl_basis(int n) {
  if (n < 2) throw std::invalid_argument("sl_basis: n >= 2 required");
  std::vector<AlgebraElement> basis;
  basis.reserve(static_cast<std::size_t>(n) * n - 1);
  for (const Root& r : all_roots(n)) basis.push_back(r.vector(n));
  for (int k = 0; k + 1 < n; ++k) {
    Matrix m = Matrix::Zero(n, n);
    m(k, k) = 1.0;
    m(k + 1, k + 1) = -1.0;
    basis.push_back(AlgebraElement(std::move(m)));
  }
  return basis;
}

CVector sl_coords(const Matrix& X) {
  const int n = static_cast<int>(X.rows());
  CVector coords(n * n - 1);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) coords(idx++) = X(i, j);
  // Diagonal part d = sum_k c_k (E_kk - E_(k+1)(k+1)) gives c_k as the
  // k-th partial sum of the diagonal.
  Complex partial = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    partial += X(k, k);
    coords(idx++) = partial;
  }
  return coords;
}

Matrix ad_matrix(const AlgebraElement& X) {
  const int n = X.n();
  const auto basis = sl_basis(n);
  const int d = static_cast<int>(basis.size());
  Matrix ad(d, d);
  for (int b = 0; b < d; ++b)
    ad.col(b) = sl_coords(X.mat() * basis[static_cast<std::size_t>(b)].mat() -
                          basis[static_cast<std::size_t>(b)].mat() * X.mat());
  return ad;
}

double ad_operator_norm(const CartanElement& H) {
  double m = 0.0;
  for (const Root& r : all_roots(H.n())) m = std::max(m, std::abs(r.eval(H)));
  return m;
}

CVector charpoly_coeffs(const Matrix& A) {
  const int n = static_cast<int>(A.rows());
  CVector c(n);
  Matrix M = A;
  c(0) = -M.trace();
  for (int k = 2; k <= n; ++k) {
    M = A * (M + c(k - 2) * Matrix::Identity(n, n));
    c(k - 1) = -M.trace() / static_cast<double>(k);
  }
  return c;
}

double charpoly_drift_from(const Matrix& x, const CVector& reference_coeffs) {
  const CVector c = charpoly_coeffs(x);
  const double scale = reference_coeffs.cwiseAbs().maxCoeff();
  return (c - reference_coeffs).cwiseAbs().maxCoeff() / (1.0 + scale);
}

}  // namespace orbitfib
