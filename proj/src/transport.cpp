#include "orbitfib/transport.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "orbitfib/rng.hpp"

namespace orbitfib {

namespace {

Matrix z_numerator(const Matrix& x, const Matrix& Hm) {
  const Matrix tx = -x.conjugate().transpose();
  const Matrix txh = tx * Hm - Hm * tx;
  return x * txh - txh * x;  // [x,[tau x,H]]
}

Matrix bracket_with(const Matrix& x, const Matrix& Hm) { return x * Hm - Hm * x; }

void require_off_singular(const Matrix& x, const CartanElement& H, const Matrix& Hm) {
  const double scale = (1.0 + x.cwiseAbs().maxCoeff()) * (1.0 + H.max_abs());
  if (bracket_with(x, Hm).norm() <= tol::structural * scale)
    throw std::domain_error("z field: [x,H] vanishes numerically (x at or near a singularity)");
}

Matrix z_field_mat(const Matrix& x, const CartanElement& H, const Matrix& Hm, double c) {
  require_off_singular(x, H, Hm);
  const Matrix u = z_numerator(x, Hm);
  const Complex dfu = c * (Hm * u).trace();
  if (std::abs(dfu) < 1e-14)
    throw std::domain_error("z field: df_H(u) vanished; x is numerically singular");
  return u / dfu;
}

double min_distance_to(const Matrix& x, const WeylOrbitRecord& orbit) {
  double dist = std::numeric_limits<double>::infinity();
  for (const CartanElement& w : orbit.points)
    dist = std::min(dist, (x - w.embed().mat()).norm());
  return dist;
}

double segment_distance(Complex a, Complex b, Complex p) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double s = ((p - a) * std::conj(ab)).real() / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(p - (a + s * ab));
}

}  // namespace

double default_epsilon(const WeylOrbitRecord& orbit) {
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < orbit.points.size(); ++a)
    for (std::size_t b = a + 1; b < orbit.points.size(); ++b)
      min_gap = std::min(min_gap,
                         (orbit.points[a].diag() - orbit.points[b].diag()).norm());
  if (!std::isfinite(min_gap)) return 1e-2;
  return std::max(1e-2, 0.5 * min_gap);
}

AlgebraElement z_field_raw(const OrbitPoint& p, const CartanElement& H, const FormConfig& cfg) {
  if (p.x.n() != H.n()) throw std::invalid_argument("z_field_raw: dimension mismatch");
  const Matrix Hm = H.embed().mat();
  require_off_singular(p.x.mat(), H, Hm);
  const Matrix u = z_numerator(p.x.mat(), Hm);
  const double norm2 = cfg.c() * bracket_with(p.x.mat(), Hm).squaredNorm();
  return AlgebraElement(u / norm2);
}

AlgebraElement z_field(const OrbitPoint& p, const CartanElement& H, const FormConfig& cfg) {
  if (p.x.n() != H.n()) throw std::invalid_argument("z_field: dimension mismatch");
  return AlgebraElement(z_field_mat(p.x.mat(), H, H.embed().mat(), cfg.c()));
}

FlowResult flow(const OrbitPoint& x0, double theta, double T, const FlowConfig& cfg,
                const FormConfig& forms, const CartanElement& H, const WeylOrbitRecord& orbit) {
  if (T < 0.0) throw std::invalid_argument("flow: T must be nonnegative");
  if (cfg.step <= 0.0) throw std::invalid_argument("flow: step must be positive");
  const double eps = cfg.epsilon > 0.0 ? cfg.epsilon : default_epsilon(orbit);
  const Matrix Hm = H.embed().mat();
  require_off_singular(x0.x.mat(), H, Hm);

  const CVector ref = charpoly_coeffs(orbit.base.embed().mat());
  const Complex phase = std::polar(1.0, theta);
  const Complex f0 = height(x0, H, forms);

  FlowResult result;
  Matrix x = x0.x.mat();
  double t = 0.0;
  result.states.push_back(
      FlowState{OrbitPoint{x0.x, charpoly_drift_from(x, ref)}, 0.0, theta, f0, 0.0,
                charpoly_drift_from(x, ref)});

  {
    const double dist = min_distance_to(x, orbit);
    if (dist <= eps) {
      result.status = FlowStatus::aborted_safety_radius;
      std::ostringstream msg;
      msg << "flow: start point at distance " << dist << " <= epsilon " << eps
          << " from a singularity";
      result.message = msg.str();
      return result;
    }
  }

  const double c = forms.c();
  while (t < T) {
    const double h = std::min(cfg.step, T - t);
    Matrix xn;
    try {
      const Matrix k1 = phase * z_field_mat(x, H, Hm, c);
      const Matrix k2 = phase * z_field_mat(x + 0.5 * h * k1, H, Hm, c);
      const Matrix k3 = phase * z_field_mat(x + 0.5 * h * k2, H, Hm, c);
      const Matrix k4 = phase * z_field_mat(x + h * k3, H, Hm, c);
      xn = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } catch (const std::domain_error& e) {
      result.status = FlowStatus::aborted_safety_radius;
      std::ostringstream msg;
      msg << "flow: field evaluation failed at t = " << t << " (" << e.what() << ")";
      result.message = msg.str();
      return result;
    }
    t += h;

    const double dist = min_distance_to(xn, orbit);
    if (dist <= eps) {
      result.status = FlowStatus::aborted_safety_radius;
      std::ostringstream msg;
      msg << "flow: trajectory left the safety region at t = " << t << " (distance " << dist
          << " <= epsilon " << eps << ")";
      result.message = msg.str();
      return result;
    }

    FlowState state;
    state.t = t;
    state.theta = theta;
    state.f_value = c * (H.diag().array() * xn.diagonal().array()).sum();
    state.f_drift = std::abs(state.f_value - (f0 + t * phase));
    state.charpoly_drift = charpoly_drift_from(xn, ref);
    if (state.f_drift > cfg.max_f_drift || state.charpoly_drift > cfg.max_charpoly_drift) {
      result.status = FlowStatus::aborted_drift_budget;
      std::ostringstream msg;
      msg << "flow: drift budget exceeded at t = " << t << " (f_drift " << state.f_drift
          << ", charpoly_drift " << state.charpoly_drift << ")";
      result.message = msg.str();
      return result;
    }
    state.point = OrbitPoint{AlgebraElement(xn), state.charpoly_drift};
    result.states.push_back(std::move(state));
    x = std::move(xn);
  }
  return result;
}

std::vector<FlowResult> transport_fibre_trajectories(const std::vector<OrbitPoint>& samples,
                                                     Complex from, Complex to,
                                                     const FlowConfig& cfg,
                                                     const FormConfig& forms,
                                                     const CartanElement& H,
                                                     const WeylOrbitRecord& orbit) {
  const GeneralPositionReport gp = critical_values(H, orbit, forms);
  for (const auto& [w, value] : gp.critical_values) {
    const double dist = segment_distance(from, to, value);
    if (dist <= cfg.value_margin) {
      std::ostringstream msg;
      msg << "transport_fibre: path passes within " << cfg.value_margin
          << " of the critical value (" << value.real() << ", " << value.imag() << ")";
      throw std::domain_error(msg.str());
    }
  }

  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Complex f = height(samples[k], H, forms);
    if (std::abs(f - from) > std::max(cfg.max_f_drift, 1e-9 * (1.0 + std::abs(from)))) {
      std::ostringstream msg;
      msg << "transport_fibre: sample " << k << " is not on the source fibre (f = (" << f.real()
          << ", " << f.imag() << "), expected (" << from.real() << ", " << from.imag() << "))";
      throw std::invalid_argument(msg.str());
    }
  }

  std::vector<FlowResult> out;
  out.reserve(samples.size());
  const double T = std::abs(to - from);
  const double theta = T > 0.0 ? std::arg(to - from) : 0.0;
  for (const OrbitPoint& s : samples) {
    if (T == 0.0) {
      FlowResult r;
      r.states.push_back(FlowState{s, 0.0, theta, height(s, H, forms), 0.0, s.charpoly_drift});
      out.push_back(std::move(r));
    } else {
      out.push_back(flow(s, theta, T, cfg, forms, H, orbit));
    }
  }
  return out;
}

std::vector<OrbitPoint> transport_fibre(const std::vector<OrbitPoint>& samples, Complex from,
                                        Complex to, const FlowConfig& cfg,
                                        const FormConfig& forms, const CartanElement& H,
                                        const WeylOrbitRecord& orbit) {
  auto trajectories = transport_fibre_trajectories(samples, from, to, cfg, forms, H, orbit);
  std::vector<OrbitPoint> out;
  out.reserve(trajectories.size());
  for (std::size_t k = 0; k < trajectories.size(); ++k) {
    if (!trajectories[k].ok()) {
      std::ostringstream msg;
      msg << "transport_fibre: sample " << k << " aborted: " << trajectories[k].message;
      throw std::runtime_error(msg.str());
    }
    out.push_back(trajectories[k].states.back().point);
  }
  return out;
}

double BracketBoundEstimate::bound_at(const AlgebraElement& x, const CartanElement& H) const {
  const Matrix Hm = H.embed().mat();
  const double bh = (x.mat() * Hm - Hm * x.mat()).norm();
  if (bh == 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * M * (ad_operator_norm(H) + M * H.embed().frobenius()) * x.frobenius() / (bh * bh);
}

BracketBoundEstimate estimate_bracket_constant(int n, int trials, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("estimate_bracket_constant: n >= 2 required");
  if (trials < 1) throw std::invalid_argument("estimate_bracket_constant: trials >= 1 required");
  DetRng rng(seed);
  BracketBoundEstimate est;
  est.n = n;
  est.trials = trials;
  for (int k = 0; k < trials; ++k) {
    const AlgebraElement X = rng.traceless(n);
    const AlgebraElement Y = rng.traceless(n);
    const double den = X.frobenius() * Y.frobenius();
    if (den == 0.0) continue;
    est.M = std::max(est.M, bracket(X, Y).frobenius() / den);
  }
  return est;
}

}  // namespace orbitfib
