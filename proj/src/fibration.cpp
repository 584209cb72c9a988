#include "orbitfib/fibration.hpp"

#include <stdexcept>

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace orbitfib {

namespace {

CVector vec(const Matrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

Matrix unvec(const CVector& v, int n) {
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

}  // namespace

OrbitPoint make_orbit_point(AlgebraElement x, const CartanElement& H0) {
  if (x.n() != H0.n()) throw std::invalid_argument("make_orbit_point: dimension mismatch");
  const CVector ref = charpoly_coeffs(H0.embed().mat());
  const double drift = charpoly_drift_from(x.mat(), ref);
  return OrbitPoint{std::move(x), drift};
}

OrbitPoint sample_orbit_point(const CartanElement& H0, const AlgebraElement& A) {
  if (A.n() != H0.n()) throw std::invalid_argument("sample_orbit_point: dimension mismatch");
  if (A.frobenius() > 20.0)
    throw std::invalid_argument("sample_orbit_point: ||A|| > 20 rejected (exp overflow)");
  const Matrix g = A.mat().exp();
  const Matrix ginv = (-A.mat()).exp();
  return make_orbit_point(AlgebraElement(g * H0.embed().mat() * ginv), H0);
}

Complex height(const OrbitPoint& x, const CartanElement& H, const FormConfig& cfg) {
  if (x.x.n() != H.n()) throw std::invalid_argument("height: dimension mismatch");
  return cfg.c() * (H.diag().array() * x.x.mat().diagonal().array()).sum();
}

std::vector<AlgebraElement> TangentBasis::realified() const {
  std::vector<AlgebraElement> out;
  out.reserve(2 * vectors.size());
  for (const AlgebraElement& b : vectors) {
    out.push_back(b);
    out.push_back(AlgebraElement(Complex(0.0, 1.0) * b.mat()));
  }
  return out;
}

TangentBasis tangent_basis(const OrbitPoint& p) {
  const int n = p.x.n();
  const auto basis = sl_basis(n);
  Matrix cols(n * n, static_cast<int>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b)
    cols.col(static_cast<int>(b)) =
        vec(p.x.mat() * basis[b].mat() - basis[b].mat() * p.x.mat());

  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  TangentBasis tb;
  tb.base_point = p;
  for (int k = 0; k < sigma.size(); ++k) {
    if (smax <= 0.0 || sigma(k) <= tol::rank_rel * smax) break;
    tb.vectors.push_back(AlgebraElement(unvec(svd.matrixU().col(k), n)));
  }
  tb.complex_dim = static_cast<int>(tb.vectors.size());
  return tb;
}

TangentBasis fibre_tangent_basis(const OrbitPoint& p, const CartanElement& H,
                                 const FormConfig& cfg) {
  const Matrix Hm = H.embed().mat();
  const Matrix bh = p.x.mat() * Hm - Hm * p.x.mat();
  const double scale = (1.0 + p.x.max_abs()) * (1.0 + H.max_abs());
  if (bh.norm() <= tol::structural * scale)
    throw std::domain_error("fibre_tangent_basis: x is a singular point of f_H");

  TangentBasis tb = tangent_basis(p);
  const int m = tb.complex_dim;
  Matrix d(1, m);
  for (int k = 0; k < m; ++k) d(0, k) = cfg.c() * (Hm * tb.vectors[static_cast<std::size_t>(k)].mat()).trace();

  Eigen::JacobiSVD<Matrix> svd(d, Eigen::ComputeFullV);
  TangentBasis fib;
  fib.base_point = p;
  for (int col = 1; col < m; ++col) {
    Matrix combo = Matrix::Zero(p.x.n(), p.x.n());
    for (int k = 0; k < m; ++k)
      combo += svd.matrixV()(k, col) * tb.vectors[static_cast<std::size_t>(k)].mat();
    fib.vectors.push_back(AlgebraElement(std::move(combo)));
  }
  fib.complex_dim = static_cast<int>(fib.vectors.size());
  return fib;
}

Complex differential(const OrbitPoint& p, const AlgebraElement& V, const CartanElement& H,
                     const FormConfig& cfg) {
  if (V.n() != p.x.n() || H.n() != p.x.n())
    throw std::invalid_argument("differential: dimension mismatch");
  const TangentBasis tb = tangent_basis(p);
  Matrix proj = Matrix::Zero(V.n(), V.n());
  for (const AlgebraElement& b : tb.vectors) {
    const Complex coeff = (V.mat().cwiseProduct(b.mat().conjugate())).sum();
    proj += coeff * b.mat();
  }
  const double residual = (V.mat() - proj).norm();
  if (residual > tol::scaled(1e-8, V.frobenius()))
    throw std::domain_error("differential: V is not tangent to the orbit at x");
  return cfg.c() * (H.embed().mat() * V.mat()).trace();
}

std::vector<CartanElement> critical_points(const CartanElement& H0, const CartanElement& H,
                                           double regularity_tol) {
  if (H0.n() != H.n()) throw std::invalid_argument("critical_points: dimension mismatch");
  if (!is_regular(H, regularity_tol))
    throw std::domain_error("critical_points: H must be regular");
  const WeylOrbitRecord orbit = weyl_orbit(H0);
  const Matrix Hm = H.embed().mat();
  for (const CartanElement& w : orbit.points) {
    const Matrix wm = w.embed().mat();
    if ((wm * Hm - Hm * wm).norm() > 1e-12)
      throw std::logic_error("critical_points: diagonal bracket failed to vanish");
  }
  return orbit.points;
}

HessianCertificate hessian_certificate(const CartanElement& x0, const CartanElement& H,
                                       const FormConfig& cfg) {
  if (x0.n() != H.n()) throw std::invalid_argument("hessian_certificate: dimension mismatch");
  const Matrix x0m = x0.embed().mat();
  const Matrix Hm = H.embed().mat();
  const double scale = (1.0 + x0.max_abs()) * (1.0 + H.max_abs());
  if ((x0m * Hm - Hm * x0m).norm() > tol::scaled(tol::trace, scale))
    throw std::domain_error("hessian_certificate: x0 is not a critical point ([x0,H] != 0)");

  const TangentBasis tb = tangent_basis(make_orbit_point(x0.embed(), x0));
  const auto real_basis = tb.realified();
  const int dim = static_cast<int>(real_basis.size());
  Eigen::MatrixXd gram(dim, dim);
  for (int b = 0; b < dim; ++b) {
    const Matrix hb = Hm * real_basis[static_cast<std::size_t>(b)].mat() -
                      real_basis[static_cast<std::size_t>(b)].mat() * Hm;
    const Matrix xhb = x0m * hb - hb * x0m;
    for (int a = 0; a < dim; ++a)
      gram(a, b) = (cfg.c() * (xhb * real_basis[static_cast<std::size_t>(a)].mat()).trace()).real();
  }

  HessianCertificate cert;
  cert.singularity = x0;
  cert.gram = gram;
  if (dim > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    cert.min_singular_value = svd.singularValues().minCoeff();
    cert.max_singular_value = svd.singularValues().maxCoeff();
  }
  cert.nondegenerate = dim > 0 && cert.min_singular_value > tol::rank_rel * cert.max_singular_value;
  return cert;
}

bool FibrationAnalysis::all_hessians_nondegenerate() const {
  for (const HessianCertificate& h : hessians)
    if (!h.nondegenerate) return false;
  return true;
}

}  // namespace orbitfib
