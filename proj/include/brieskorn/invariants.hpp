#pragma once

// Exact monodromy invariants of the singularity z_0^{a_0} + ... + z_n^{a_n}.
// The monodromy eigenvalues are the products of nontrivial a_j-th roots of
// unity, i.e. the angles sum_j k_j/a_j mod 1 with 0 < k_j < a_j. The multiset
// is Galois stable, so it is stored as one multiplicity per denominator, and
// the characteristic polynomial at 1 factors through cyclotomic values:
// Phi_d(1) is p for prime powers d = p^e and 1 otherwise.

#include <map>
#include <numeric>
#include <vector>

#include "brieskorn/bignat.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/tuples.hpp"

namespace brieskorn {

inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

/// Galois-stable eigenvalue profile: mult[d] is the shared multiplicity of
/// every primitive d-th root of unity; total is the full eigenvalue count.
struct CyclotomicMultiset {
  std::map<long long, long long> mult;
  long long total = 0;

  long long multiplicity(long long d) const {
    auto it = mult.find(d);
    return it == mult.end() ? 0 : it->second;
  }
};

inline long long euler_phi(long long d) {
  long long result = d;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

/// If d >= 2 is a prime power p^e, returns p; otherwise 0.
inline long long prime_power_base(long long d) {
  if (d < 2) return 0;
  long long p = 0;
  long long rest = d;
  for (long long q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      p = q;
      while (rest % q == 0) rest /= q;
      break;
    }
  }
  if (p == 0) return d;  // d itself prime
  return rest == 1 ? p : 0;
}

/// Value of the d-th cyclotomic polynomial at 1, for d >= 2.
inline long long cyclotomic_at_one(long long d) {
  long long p = prime_power_base(d);
  return p == 0 ? 1 : p;
}

/// Product of (a_j - 1): the middle Betti number of the fiber and the
/// degree of the characteristic polynomial.
inline long long milnor_number(const ExponentTuple& a) {
  __int128 mu = 1;
  for (long long aj : a.entries()) {
    mu *= (aj - 1);
    if (mu > INT64_MAX) throw InputError("milnor number overflows");
  }
  return static_cast<long long>(mu);
}

/// Enumerates all eigenvalue angles and folds them into the per-denominator
/// profile. Fails loudly if the raw counts are not Galois stable, which
/// would indicate a bug rather than bad input.
inline CyclotomicMultiset eigenvalue_multiset(
    const ExponentTuple& a, long long budget = kDefaultEnumerationBudget) {
  const long long mu = milnor_number(a);
  if (mu > budget)
    throw BudgetExceeded("eigenvalue enumeration needs " + std::to_string(mu) +
                         " tuples, budget is " + std::to_string(budget));

  CyclotomicMultiset out;
  if (mu == 0) return out;  // some a_j = 1: no eigenvalues at all

  const long long D = a.lcm();
  const std::size_t width = a.size();
  std::vector<long long> step(width);
  for (std::size_t j = 0; j < width; ++j) step[j] = D / a[j];

  // Odometer over k_j in 1..a_j-1 keeping the running angle numerator mod D.
  std::vector<long long> counts(static_cast<std::size_t>(D), 0);
  std::vector<long long> k(width, 1);
  long long s = 0;
  for (std::size_t j = 0; j < width; ++j) s = (s + step[j]) % D;
  for (;;) {
    ++counts[static_cast<std::size_t>(s)];
    std::size_t j = 0;
    for (; j < width; ++j) {
      if (k[j] + 1 < a[j]) {
        ++k[j];
        s = (s + step[j]) % D;
        break;
      }
      // reset digit: k_j falls back from a_j - 1 to 1
      s = (s - (k[j] - 1) * step[j]) % D;
      if (s < 0) s += D;
      k[j] = 1;
    }
    if (j == width) break;
  }

  long long seen = 0;
  for (long long c : counts) seen += c;
  if (seen != mu) throw InternalError("eigenvalue enumeration miscounted");

  // Group raw angle counts s/D by reduced denominator and check stability.
  for (long long d = 1; d <= D; ++d) {
    if (D % d != 0) continue;
    long long common = -1;
    for (long long r = 0; r < d; ++r) {
      if (d > 1 && std::gcd(r, d) != 1) continue;
      if (d == 1 && r != 0) continue;
      long long c = counts[static_cast<std::size_t>(r * (D / d))];
      if (common < 0)
        common = c;
      else if (common != c)
        throw InternalError("Galois stability violated at denominator " +
                            std::to_string(d));
    }
    if (common > 0) {
      out.mult[d] = common;
      out.total += common * euler_phi(d);
    }
  }
  if (out.total != mu)
    throw InternalError("eigenvalue profile total mismatch");
  return out;
}

/// Characteristic polynomial of the monodromy evaluated at 1, as an exact
/// integer (the prime-power products run to hundreds of bits on modest
/// exponents). Zero when 1 itself is an eigenvalue; never negative, since the
/// nontrivial eigenvalues pair up into conjugates.
inline BigNat delta_at_one(const ExponentTuple& a,
                           long long budget = kDefaultEnumerationBudget) {
  CyclotomicMultiset profile = eigenvalue_multiset(a, budget);
  if (profile.multiplicity(1) > 0) return BigNat(0);
  BigNat value(1);
  for (const auto& [d, m] : profile.mult) {
    if (d < 2) continue;
    std::uint32_t base = static_cast<std::uint32_t>(cyclotomic_at_one(d));
    if (base == 1) continue;
    for (long long i = 0; i < m; ++i) value.mul_word(base);
  }
  return value;
}

/// Topological-sphere test for the link: |delta(1)| = 1, applicable only for
/// fiber dimension n >= 3 (link dimension >= 5).
inline bool is_topological_sphere_link(
    const ExponentTuple& a, long long budget = kDefaultEnumerationBudget) {
  if (a.size() < 4)
    throw CriterionInapplicable(
        "sphere-link criterion needs n >= 3, got n = " +
        std::to_string(a.fiber_dim()));
  return delta_at_one(a, budget).is_one();
}

}  // namespace brieskorn
