#ifndef ORBITFIB_TRANSPORT_HPP
#define ORBITFIB_TRANSPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orbitfib/fibration.hpp"

namespace orbitfib {

struct FlowConfig {
  double step = 1e-3;        // RK4 step size
  double epsilon = 0.0;      // safety radius around singularities; <= 0 selects the default
  double max_f_drift = 1e-6;
  double max_charpoly_drift = 1e-6;
  double value_margin = 1e-2;  // clearance of a transport path from critical values
};

/// Default safety radius: half the minimum distance between distinct
/// orbit points, never below 1e-2.
double default_epsilon(const WeylOrbitRecord& orbit);

struct FlowState {
  OrbitPoint point;
  double t = 0.0;
  double theta = 0.0;
  Complex f_value;
  double f_drift = 0.0;
  double charpoly_drift = 0.0;
};

enum class FlowStatus { ok, aborted_safety_radius, aborted_drift_budget };

struct FlowResult {
  std::vector<FlowState> states;
  FlowStatus status = FlowStatus::ok;
  std::string message;

  bool ok() const { return status == FlowStatus::ok; }
};

/// The transversal field [x,[tau x,H]] / ||[x,H]||^2 (Hermitian norm).
/// Under the conventions here df_H evaluates to -1 on it; see z_field.
AlgebraElement z_field_raw(const OrbitPoint& x, const CartanElement& H, const FormConfig& cfg);

/// Normalized transport field u / df_H(u) with u = [x,[tau x,H]], so that
/// df_H(Z) = 1 exactly up to rounding and the flow satisfies
/// f_H(phi_t(x)) = f_H(x) + t e^{i theta}.  Sign-robust: the raw field
/// pairs to -1 with df_H, not +1 as one might expect from transversality
/// normalisation, and both fields are exposed so the discrepancy is
/// auditable.
AlgebraElement z_field(const OrbitPoint& x, const CartanElement& H, const FormConfig& cfg);

/// Fixed-step RK4 integration of x' = e^{i theta} Z(x) for time T.
/// Aborts (returning the partial trajectory) if the state comes within
/// epsilon of a singularity or exceeds a drift budget.
FlowResult flow(const OrbitPoint& x0, double theta, double T, const FlowConfig& cfg,
                const FormConfig& forms, const CartanElement& H, const WeylOrbitRecord& orbit);

/// Flows every sample from the fibre over `from` to the fibre over `to`,
/// returning full trajectories.  The straight path [from,to] must clear
/// every critical value by cfg.value_margin.
std::vector<FlowResult> transport_fibre_trajectories(const std::vector<OrbitPoint>& samples,
                                                     Complex from, Complex to,
                                                     const FlowConfig& cfg,
                                                     const FormConfig& forms,
                                                     const CartanElement& H,
                                                     const WeylOrbitRecord& orbit);

/// As above but returns only the transported endpoints; throws if any
/// trajectory aborts.
std::vector<OrbitPoint> transport_fibre(const std::vector<OrbitPoint>& samples, Complex from,
                                        Complex to, const FlowConfig& cfg,
                                        const FormConfig& forms, const CartanElement& H,
                                        const WeylOrbitRecord& orbit);

/// Sampled estimate of the bracket submultiplicativity constant
/// ||[X,Y]|| <= M ||X|| ||Y|| (Frobenius norms; analytically M <= 2),
/// with the derived bound on ||dZ_x||.
struct BracketBoundEstimate {
  double M = 0.0;
  int n = 0;
  int trials = 0;

  /// 2M(||ad(H)|| + M||H||) ||x|| / ||[x,H]||^2 evaluated at x.
  double bound_at(const AlgebraElement& x, const CartanElement& H) const;
};

BracketBoundEstimate estimate_bracket_constant(int n, int trials, std::uint64_t seed);

}  // namespace orbitfib

#endif
