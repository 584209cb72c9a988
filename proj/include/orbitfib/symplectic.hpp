#ifndef ORBITFIB_SYMPLECTIC_HPP
#define ORBITFIB_SYMPLECTIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orbitfib/fibration.hpp"

namespace orbitfib {

struct SymplecticVerdict {
  OrbitPoint point;
  int subspace_dim = 0;  // real dimension of the tested subspace
  double gram_min_sv = 0.0;
  bool nondegenerate = false;
};

/// Nondegeneracy of Omega restricted to the fibre tangent space at a
/// regular point x.
SymplecticVerdict omega_fibre_verdict(const OrbitPoint& x, const CartanElement& H,
                                      const FormConfig& cfg);

/// Roots with positive evaluation on w (real part above tol): the
/// direction space n+(w) of the affine piece w + n+(w).
std::vector<Root> positive_roots_at(const CartanElement& w, double tol = 1e-12);

/// Nondegeneracy of Omega on n+(wH0), the direction space of the affine
/// piece of the singular fibre through wH0.
SymplecticVerdict omega_affine_piece_verdict(const CartanElement& wH0, const FormConfig& cfg);

/// Kirillov-Kostant-Souriaux pairing omega_x([x,A],[x,B]) = <x,[A,B]>.
Complex kks_form(const OrbitPoint& x, const AlgebraElement& A, const AlgebraElement& B,
                 const FormConfig& cfg);

/// Max over a fibre-tangent basis {[x,A_k]} of |<x,[H,A_k]>|.  Expected to
/// vanish: [x,H] is a null direction of the KKS form inside the fibre, so
/// the fibres are not KKS-symplectic even though they are Omega-symplectic.
double kks_degeneracy_witness(const OrbitPoint& x, const CartanElement& H, const FormConfig& cfg);

struct LagrangianVerdict {
  std::string description;
  int sample_count = 0;
  double max_abs_omega = 0.0;
  bool is_lagrangian_numerically = false;
  bool dimension_check = false;
};

/// Samples the compact slice of the orbit (conjugates of a real H0 by
/// unitaries) and evaluates Omega on its tangent pairs; the slice should
/// be Lagrangian, with real dimension half that of the orbit.
LagrangianVerdict lagrangian_verdict_flag(const CartanElement& H0, int samples,
                                          std::uint64_t seed, const FormConfig& cfg);

/// sl(2)-specific: samples the sphere of traceless Hermitian matrices with
/// r^2 + p^2 + q^2 = 1 (the union of the two thimbles) and evaluates Omega
/// on its tangent pairs.  Sampling is a deterministic Fibonacci lattice.
LagrangianVerdict lagrangian_verdict_thimble_sphere(int samples, const FormConfig& cfg);

}  // namespace orbitfib

#endif
