#ifndef ORBITFIB_FIBRATION_HPP
#define ORBITFIB_FIBRATION_HPP

#include <vector>

#include "orbitfib/liealg.hpp"
#include "orbitfib/weyl.hpp"

namespace orbitfib {

/// Point of the adjoint orbit of H0, certified by the deviation of its
/// characteristic-polynomial coefficients from those of H0.
struct OrbitPoint {
  AlgebraElement x;
  double charpoly_drift = 0.0;
};

/// Wraps a matrix as an orbit point, computing its drift against H0.
OrbitPoint make_orbit_point(AlgebraElement x, const CartanElement& H0);

/// x = exp(A) H0 exp(-A).  Rejects ||A|| > 20 (exponential overflow).
OrbitPoint sample_orbit_point(const CartanElement& H0, const AlgebraElement& A);

/// Height function f_H(x) = <H,x> = c * sum_i H_i x_ii.
Complex height(const OrbitPoint& x, const CartanElement& H, const FormConfig& cfg);

/// Orthonormal complex basis of the tangent space Im ad(x), extracted by
/// singular-value thresholding of ad(x) applied to a basis of the algebra.
struct TangentBasis {
  OrbitPoint base_point;
  std::vector<AlgebraElement> vectors;
  int complex_dim = 0;

  /// Interleaved real basis B0, iB0, B1, iB1, ... of the realification.
  std::vector<AlgebraElement> realified() const;
};

TangentBasis tangent_basis(const OrbitPoint& x);

/// Basis of ker(df_H) inside Im ad(x); complex dimension drops by one.
/// Throws if x is a singular point of f_H.
TangentBasis fibre_tangent_basis(const OrbitPoint& x, const CartanElement& H,
                                 const FormConfig& cfg);

/// df_H at x evaluated on a tangent vector V: equals <H,V>.  V is checked
/// to lie in Im ad(x) within tolerance.
Complex differential(const OrbitPoint& x, const AlgebraElement& V, const CartanElement& H,
                     const FormConfig& cfg);

/// The singular points of f_H on the orbit of H0: the permutation orbit of
/// the diagonal.  Requires H regular.
std::vector<CartanElement> critical_points(const CartanElement& H0, const CartanElement& H,
                                           double regularity_tol = tol::structural);

/// Second-derivative form (A,B) -> <[x0,[H,B]],A> assembled over the
/// realified tangent basis at the singularity x0.
struct HessianCertificate {
  CartanElement singularity;
  Eigen::MatrixXd gram;
  double min_singular_value = 0.0;
  double max_singular_value = 0.0;
  bool nondegenerate = false;
};

HessianCertificate hessian_certificate(const CartanElement& x0, const CartanElement& H,
                                       const FormConfig& cfg);

/// Full verdict record for one fibration (H, H0).
struct FibrationAnalysis {
  CartanElement H;
  CartanElement H0;
  FormConfig cfg;
  WeylOrbitRecord orbit;
  GeneralPositionReport gp;
  std::vector<HessianCertificate> hessians;
  int betti_regular = 0;   // k - 1, clamped at 0
  int betti_singular = 0;  // k - 2, clamped at 0

  bool all_hessians_nondegenerate() const;
};

}  // namespace orbitfib

#endif
