#pragma once

// Reeb-chord combinatorics on the boundary Legendrian of a real Lagrangian.
// The Reeb flow rotates coordinate j at rate 1/a_j, so a fixed line is
// carried back onto itself exactly at times t with t/(pi a_j) integral. A
// chord stratum fixes which coordinates are nonzero (the support J) and the
// starting ray of each; its return times form the lattice
// pi * lcm_{j in J}(a_j) * Z. A stratum is admissible precisely when the
// induced signs of z_j^{a_j} mix, which is equivalent to nonemptiness of the
// corresponding piece of the Legendrian.
//
// Counting convention: one chord unit is a (stratum, positive lattice time)
// pair. This is deterministic bookkeeping for an action-spectrum upper
// bound, not a Floer-homology dimension.

#include <algorithm>
#include <numeric>
#include <vector>

#include "brieskorn/rational.hpp"
#include "brieskorn/tuples.hpp"
#include "brieskorn/zerodim.hpp"

namespace brieskorn {

struct ChordStratum {
  std::vector<int> support;  // ascending coordinate indices, size >= 2
  std::vector<Ray> rays;     // aligned with support
  std::vector<int> signs;    // aligned; sign of z_j^{a_j} on the chosen ray
  long long lattice_gen = 0; // lcm of a_j over the support, in pi-units

  friend bool operator==(const ChordStratum& x, const ChordStratum& y) {
    return x.support == y.support && x.rays == y.rays && x.signs == y.signs &&
           x.lattice_gen == y.lattice_gen;
  }
};

/// Period of the boundary Reeb flow in pi-units: 2 * lcm_j(a_j).
inline PiUnits reeb_period(const ExponentTuple& a) {
  return PiUnits(2 * a.lcm());
}

/// All admissible chord strata, sorted by support (lexicographic as index
/// lists) and then by ray pattern.
inline std::vector<ChordStratum> chord_strata(const ExponentTuple& a,
                                              const ReflectionTuple& m) {
  if (a.size() != m.size())
    throw InputError("exponent/reflection length mismatch");
  if (a.size() > 20)
    throw InputError("chord enumeration is exponential in the length; "
                     "refusing more than 20 coordinates");
  const int width = static_cast<int>(a.size());
  std::vector<ChordStratum> out;

  for (unsigned mask = 0; mask < (1u << width); ++mask) {
    std::vector<int> support;
    for (int j = 0; j < width; ++j)
      if (mask & (1u << j)) support.push_back(j);
    if (support.size() < 2) continue;

    long long lat = 1;
    for (int j : support) lat = std::lcm(lat, a[j]);

    const std::size_t k = support.size();
    for (unsigned rmask = 0; rmask < (1u << k); ++rmask) {
      ChordStratum s;
      s.support = support;
      s.lattice_gen = lat;
      bool has_plus = false, has_minus = false;
      for (std::size_t i = 0; i < k; ++i) {
        Ray ray = (rmask & (1u << i)) ? Ray::Opposite : Ray::Primary;
        int j = support[i];
        int sign = ray_sign(a[j], m[j], ray);
        s.rays.push_back(ray);
        s.signs.push_back(sign);
        (sign > 0 ? has_plus : has_minus) = true;
      }
      if (has_plus && has_minus) out.push_back(std::move(s));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ChordStratum& x, const ChordStratum& y) {
              if (x.support != y.support) return x.support < y.support;
              return x.rays < y.rays;
            });
  return out;
}

/// Number of (stratum, positive lattice time) pairs with time <= A.
inline long long chord_count(const ExponentTuple& a, const ReflectionTuple& m,
                             const PiUnits& action) {
  if (action.value < Rational(0))
    throw InputError("action bound must be nonnegative");
  long long total = 0;
  for (const ChordStratum& s : chord_strata(a, m))
    total += (action.value / Rational(s.lattice_gen)).floor();
  return total;
}

/// Exact limit of chord_count(A)/A as A grows: sum of 1/lattice_gen over
/// strata, in units of 1/pi.
inline Rational growth_proxy(const ExponentTuple& a,
                             const ReflectionTuple& m) {
  Rational sum(0);
  for (const ChordStratum& s : chord_strata(a, m))
    sum = sum + Rational(1, s.lattice_gen);
  return sum;
}

}  // namespace brieskorn
