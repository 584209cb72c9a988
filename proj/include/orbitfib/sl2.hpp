#ifndef ORBITFIB_SL2_HPP
#define ORBITFIB_SL2_HPP

#include <array>
#include <string>
#include <vector>

#include "orbitfib/symplectic.hpp"

namespace orbitfib {

/// Point of the surface x^2 + yz = 1, i.e. the orbit of diag(1,-1) in
/// coordinates (x,y,z) <-> the matrix (x y; z -x).
struct SurfacePoint {
  Complex x, y, z;
};

AlgebraElement surface_matrix(const SurfacePoint& p);
double surface_residual(const SurfacePoint& p);  // |x^2 + yz - 1|

/// Points (lambda/2, b, (1 - lambda^2/4)/b) of the regular fibre over
/// lambda.  Rejects lambda = +-2 and b = 0.
std::vector<SurfacePoint> fibre_points(Complex lambda, const std::vector<Complex>& b_samples);

enum class SingularBranch { none, y_axis, z_axis, vertex };

struct MembershipVerdict {
  bool member = false;
  SingularBranch branch = SingularBranch::none;
};

/// Membership of p in the singular fibre over `which` (+2 or -2):
/// x = which/2 and yz = 0.  The y_axis branch is the piece with z = 0, the
/// z_axis branch the piece with y = 0; they meet at the vertex (+-1,0,0).
MembershipVerdict singular_fibre_membership(const SurfacePoint& p, int which);

/// Vanishing-cycle circle over lambda in [-2,2]:
/// (lambda/2, e^{it} rho, e^{-it} rho) with rho = sqrt(1 - lambda^2/4).
SurfacePoint thimble_point(double lambda, double t);

/// Disc swept by the vanishing cycles over the straight path from the base
/// value 0 to the critical value +-2.
struct Thimble {
  double critical_value = 2.0;
  std::vector<double> path;
  std::vector<std::vector<SurfacePoint>> circles;
};

Thimble make_thimble(int which, int path_steps = 32, int circle_steps = 64);

/// Omega evaluated on finite-difference tangent pairs of the thimble disc
/// over a grid x grid lattice.
LagrangianVerdict thimble_lagrangian_check(int which, int grid);

/// Transverse intersections of the zero-section circle with the graph of
/// eps*df for a circle Morse function with the given number of critical
/// points.  The count equals the number of critical points and is
/// independent of eps.
int vanishing_cycle_intersections(int morse_critical_count);

struct MorsePerturbation {
  int intersection_count = 0;
  std::vector<int> degrees;  // one generator degree per intersection
  double epsilon = 0.0;
};

MorsePerturbation morse_perturbation(int morse_critical_count, double epsilon = 1e-2);

/// Directed category of the two vanishing cycles of the fibration on the
/// surface x^2 + yz = 1.
struct FSCategoryReport {
  std::vector<std::pair<std::string, int>> objects;  // (name, degree)
  std::array<std::array<int, 2>, 2> hom_ranks{};
  std::vector<std::string> products_nontrivial;
  std::string products_note;
  int intersection_count_check = 0;

  int hom_rank(int i, int j) const { return hom_ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

FSCategoryReport fs_report();

}  // namespace orbitfib

#endif
