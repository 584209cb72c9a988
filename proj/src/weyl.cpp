#include "orbitfib/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "orbitfib/rng.hpp"

namespace orbitfib {

CartanElement apply(const Permutation& w, const CartanElement& d) {
  if (w.n() != d.n()) throw std::invalid_argument("apply: dimension mismatch");
  CVector out(d.n());
  for (int k = 0; k < d.n(); ++k) out(k) = d.diag()(w.map[static_cast<std::size_t>(k)]);
  return CartanElement(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("all_permutations: n >= 1 required");
  if (n > 8) throw std::invalid_argument("all_permutations: n > 8 rejected (n! blow-up)");
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Permutation> perms;
  do {
    perms.push_back(Permutation{idx});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return perms;
}

namespace {

double entrywise_distance(const CartanElement& a, const CartanElement& b) {
  return (a.diag() - b.diag()).cwiseAbs().maxCoeff();
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

WeylOrbitRecord weyl_orbit(const CartanElement& H0, double dedup_tol) {
  const auto perms = all_permutations(H0.n());
  WeylOrbitRecord rec;
  rec.base = H0;
  int stabilizer = 0;
  for (const Permutation& w : perms) {
    CartanElement p = apply(w, H0);
    if (entrywise_distance(p, H0) < dedup_tol) ++stabilizer;
    bool seen = false;
    for (const CartanElement& q : rec.points)
      if (entrywise_distance(p, q) < dedup_tol) {
        seen = true;
        break;
      }
    if (!seen) rec.points.push_back(std::move(p));
  }
  rec.orbit_size = static_cast<int>(rec.points.size());
  rec.stabilizer_size = stabilizer;
  if (static_cast<long>(rec.orbit_size) * rec.stabilizer_size != factorial(H0.n()))
    throw std::domain_error(
        "weyl_orbit: orbit and stabilizer counts are inconsistent with n! "
        "(near-coincident diagonal entries straddle the dedup tolerance)");
  return rec;
}

GeneralPositionReport critical_values(const CartanElement& H, const WeylOrbitRecord& orbit,
                                      const FormConfig& cfg, double gap_threshold) {
  if (H.n() != orbit.base.n()) throw std::invalid_argument("critical_values: dimension mismatch");
  GeneralPositionReport rep;
  rep.gap_threshold = gap_threshold;
  rep.critical_values.reserve(orbit.points.size());
  for (const CartanElement& w : orbit.points) {
    const Complex value = cfg.c() * (H.diag().array() * w.diag().array()).sum();
    rep.critical_values.emplace_back(w, value);
  }
  rep.min_pairwise_gap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < rep.critical_values.size(); ++a)
    for (std::size_t b = a + 1; b < rep.critical_values.size(); ++b)
      rep.min_pairwise_gap = std::min(
          rep.min_pairwise_gap,
          std::abs(rep.critical_values[a].second - rep.critical_values[b].second));
  rep.is_general_position = rep.min_pairwise_gap > gap_threshold;
  return rep;
}

CartanElement suggest_general_position(const CartanElement& H0, std::uint64_t seed) {
  const WeylOrbitRecord orbit = weyl_orbit(H0);
  DetRng rng(seed);
  const FormConfig cfg;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> d(static_cast<std::size_t>(H0.n()));
    double sum = 0.0;
    for (double& v : d) {
      v = rng.uniform(-2.0, 2.0);
      sum += v;
    }
    for (double& v : d) v -= sum / H0.n();
    CartanElement h = CartanElement::from_reals(d);
    if (!is_regular(h, 1e-3)) continue;
    if (critical_values(h, orbit, cfg).is_general_position) return h;
  }
  throw std::runtime_error(
      "suggest_general_position: no admissible H after 1000 attempts (pathological H0)");
}

}  // namespace orbitfib
