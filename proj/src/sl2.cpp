#include "orbitfib/sl2.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace orbitfib {

AlgebraElement surface_matrix(const SurfacePoint& p) {
  Matrix m(2, 2);
  m << p.x, p.y, p.z, -p.x;
  return AlgebraElement(std::move(m));
}

double surface_residual(const SurfacePoint& p) { return std::abs(p.x * p.x + p.y * p.z - 1.0); }

std::vector<SurfacePoint> fibre_points(Complex lambda, const std::vector<Complex>& b_samples) {
  if (std::abs(lambda - 2.0) < 1e-12 || std::abs(lambda + 2.0) < 1e-12)
    throw std::invalid_argument("fibre_points: lambda = +-2 is a critical value");
  const Complex q = 1.0 - lambda * lambda / 4.0;
  std::vector<SurfacePoint> out;
  out.reserve(b_samples.size());
  for (const Complex& b : b_samples) {
    if (b == Complex(0.0, 0.0)) throw std::invalid_argument("fibre_points: b = 0 rejected");
    out.push_back(SurfacePoint{lambda / 2.0, b, q / b});
  }
  return out;
}

MembershipVerdict singular_fibre_membership(const SurfacePoint& p, int which) {
  if (which != 2 && which != -2)
    throw std::invalid_argument("singular_fibre_membership: which must be +2 or -2");
  MembershipVerdict v;
  if (std::abs(p.x - static_cast<double>(which) / 2.0) >= 1e-10) return v;
  if (std::abs(p.y * p.z) >= 1e-10) return v;
  v.member = true;
  const double ay = std::abs(p.y);
  const double az = std::abs(p.z);
  if (ay <= 1e-10 && az <= 1e-10)
    v.branch = SingularBranch::vertex;
  else if (az <= ay)
    v.branch = SingularBranch::y_axis;
  else
    v.branch = SingularBranch::z_axis;
  return v;
}

SurfacePoint thimble_point(double lambda, double t) {
  if (std::abs(lambda) > 2.0 + 1e-12)
    throw std::invalid_argument("thimble_point: |lambda| <= 2 required");
  const double rho = std::sqrt(std::max(0.0, 1.0 - lambda * lambda / 4.0));
  return SurfacePoint{lambda / 2.0, std::polar(rho, t), std::polar(rho, -t)};
}

Thimble make_thimble(int which, int path_steps, int circle_steps) {
  if (which != 2 && which != -2) throw std::invalid_argument("make_thimble: which must be +2 or -2");
  if (path_steps < 1 || circle_steps < 1) throw std::invalid_argument("make_thimble: bad grid");
  Thimble t;
  t.critical_value = which;
  for (int k = 0; k <= path_steps; ++k) {
    const double lambda = which * static_cast<double>(k) / path_steps;
    t.path.push_back(lambda);
    std::vector<SurfacePoint> circle;
    circle.reserve(static_cast<std::size_t>(circle_steps));
    for (int j = 0; j < circle_steps; ++j)
      circle.push_back(thimble_point(lambda, 2.0 * M_PI * j / circle_steps));
    t.circles.push_back(std::move(circle));
  }
  return t;
}

namespace {

Matrix thimble_matrix(double lambda, double t) { return surface_matrix(thimble_point(lambda, t)).mat(); }

}  // namespace

LagrangianVerdict thimble_lagrangian_check(int which, int grid) {
  if (which != 2 && which != -2)
    throw std::invalid_argument("thimble_lagrangian_check: which must be +2 or -2");
  if (grid < 2) throw std::invalid_argument("thimble_lagrangian_check: grid >= 2 required");
  const double h = 1e-5;
  const FormConfig cfg;  // Omega vanishing is c-independent

  LagrangianVerdict v;
  v.description = "thimble disc (finite-difference tangents)";
  v.sample_count = grid * grid;
  v.dimension_check = true;
  for (int a = 0; a < grid; ++a) {
    // Interior lambda values; the disc degenerates at the critical value.
    const double lambda = which * (a + 0.5) / grid;
    for (int b = 0; b < grid; ++b) {
      const double t = 2.0 * M_PI * b / grid;
      const Matrix dl = (thimble_matrix(lambda + h, t) - thimble_matrix(lambda - h, t)) / (2.0 * h);
      const Matrix dt = (thimble_matrix(lambda, t + h) - thimble_matrix(lambda, t - h)) / (2.0 * h);
      const double w = std::abs(omega_form(AlgebraElement(dl), AlgebraElement(dt), cfg));
      v.max_abs_omega = std::max(v.max_abs_omega, w);

      Eigen::MatrixXd realified(8, 2);
      for (int row = 0; row < 4; ++row) {
        const Complex cl = dl(row % 2, row / 2);
        const Complex ct = dt(row % 2, row / 2);
        realified(2 * row, 0) = cl.real();
        realified(2 * row + 1, 0) = cl.imag();
        realified(2 * row, 1) = ct.real();
        realified(2 * row + 1, 1) = ct.imag();
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(realified);
      if (svd.singularValues()(1) <= tol::rank_rel * svd.singularValues()(0))
        v.dimension_check = false;
    }
  }
  v.is_lagrangian_numerically = v.max_abs_omega < 1e-8 && v.dimension_check;
  return v;
}

MorsePerturbation morse_perturbation(int morse_critical_count, double epsilon) {
  if (morse_critical_count < 2 || morse_critical_count % 2 != 0)
    throw std::invalid_argument("morse_perturbation: critical count must be even and >= 2");
  if (epsilon <= 0.0) throw std::invalid_argument("morse_perturbation: epsilon > 0 required");
  const int k = morse_critical_count / 2;  // f(theta) = cos(k theta)
  const auto df = [k, epsilon](double theta) { return -epsilon * k * std::sin(k * theta); };
  const auto ddf = [k](double theta) { return -k * k * std::cos(k * theta); };

  // Transverse intersections of the zero section with the graph of eps*df
  // are the sign changes of eps*df around the circle.
  const int N = 1 << 13;
  MorsePerturbation out;
  out.epsilon = epsilon;
  const auto grid_theta = [N](int j) { return 2.0 * M_PI * (j + 0.37) / N; };
  for (int j = 0; j < N; ++j) {
    const double g0 = df(grid_theta(j));
    const double g1 = df(grid_theta(j + 1));
    if (g0 == 0.0 || g0 * g1 >= 0.0) continue;
    // Bisection for the crossing.
    double lo = grid_theta(j), hi = grid_theta(j + 1);
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (df(lo) * df(mid) <= 0.0)
        hi = mid;
      else
        lo = mid;
    }
    const double theta_star = 0.5 * (lo + hi);
    ++out.intersection_count;
    // Morse index 1 at a maximum (f'' < 0), 0 at a minimum; the generator
    // degree is 1 - index.
    out.degrees.push_back(ddf(theta_star) < 0.0 ? 0 : 1);
  }
  return out;
}

int vanishing_cycle_intersections(int morse_critical_count) {
  return morse_perturbation(morse_critical_count).intersection_count;
}

FSCategoryReport fs_report() {
  FSCategoryReport rep;
  const MorsePerturbation morse = morse_perturbation(2);
  if (morse.intersection_count != 2)
    throw std::logic_error("fs_report: perturbation count disagrees with the expected rank 2");
  rep.objects = {{"L0", 0}, {"L1", 1}};
  rep.hom_ranks = {{{1, 2}, {0, 1}}};
  rep.products_nontrivial = {"m2(., id)", "m2(id, .)"};
  rep.products_note =
      "identity compositions only; higher products vanish (stated structural result, "
      "not recomputed from holomorphic discs)";
  rep.intersection_count_check = morse.intersection_count;
  return rep;
}

}  // namespace orbitfib
