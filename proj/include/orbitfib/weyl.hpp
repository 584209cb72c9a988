#ifndef ORBITFIB_WEYL_HPP
#define ORBITFIB_WEYL_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "orbitfib/liealg.hpp"

namespace orbitfib {

/// Permutation of {0..n-1}; entry k is the image of index k.
struct Permutation {
  std::vector<int> map;
  int n() const { return static_cast<int>(map.size()); }
};

/// Permuted diagonal: result_k = d_{map[k]}.
CartanElement apply(const Permutation& w, const CartanElement& d);

/// All n! permutations.  Enumeration is capped at n <= 8.
std::vector<Permutation> all_permutations(int n);

struct WeylOrbitRecord {
  CartanElement base;
  std::vector<CartanElement> points;
  int orbit_size = 0;
  int stabilizer_size = 0;
};

/// Orbit of H0 under permutations of the diagonal, deduplicated with
/// entrywise max-distance below dedup_tol.
WeylOrbitRecord weyl_orbit(const CartanElement& H0, double dedup_tol = 1e-10);

struct GeneralPositionReport {
  /// Pairs (orbit point, <H, point>) aligned with the orbit record.
  std::vector<std::pair<CartanElement, Complex>> critical_values;
  bool is_general_position = false;
  double min_pairwise_gap = std::numeric_limits<double>::infinity();
  double gap_threshold = 1e-3;
};

/// Critical values <H, wH0> = c * sum_i H_i (wH0)_i over the orbit, with
/// the pairwise-distinctness flag.
GeneralPositionReport critical_values(const CartanElement& H, const WeylOrbitRecord& orbit,
                                      const FormConfig& cfg, double gap_threshold = 1e-3);

/// Rejection-samples a real regular H whose critical values over the orbit
/// of H0 are pairwise separated by at least 1e-3.  Deterministic given the
/// seed; throws after 1000 failed attempts.
CartanElement suggest_general_position(const CartanElement& H0, std::uint64_t seed);

}  // namespace orbitfib

#endif
