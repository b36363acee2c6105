#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "brieskorn/invariants.hpp"

using namespace brieskorn;

namespace {

// Independent oracle: enumerate every tuple (k_0, ..., k_n), 0 < k_j < a_j,
// reduce the angle sum_j k_j / a_j mod 1 and count reduced fractions.
std::map<std::pair<long long, long long>, long long> angle_counts_brute(
    const ExponentTuple& a) {
  std::map<std::pair<long long, long long>, long long> counts;
  std::vector<long long> k(a.size(), 1);
  for (long long aj : a.entries())
    if (aj == 1) return counts;
  for (;;) {
    RationalAngle q(0, 1);
    for (std::size_t j = 0; j < a.size(); ++j)
      q = q + RationalAngle(k[j], a[j]);
    ++counts[{q.num(), q.den()}];
    std::size_t j = 0;
    for (; j < a.size(); ++j) {
      if (k[j] + 1 < a[j]) {
        ++k[j];
        break;
      }
      k[j] = 1;
    }
    if (j == a.size()) break;
  }
  return counts;
}

// Multiset expanded back to per-angle counts, for comparison with the oracle.
std::map<std::pair<long long, long long>, long long> expand_profile(
    const CyclotomicMultiset& profile) {
  std::map<std::pair<long long, long long>, long long> counts;
  for (const auto& [d, mult] : profile.mult) {
    for (long long r = 0; r < d; ++r) {
      if (d == 1 && r != 0) continue;
      if (d > 1 && std::gcd(r, d) != 1) continue;
      counts[{r, d}] = mult;
    }
  }
  return counts;
}

// Floating-point oracle for delta(1): the real product over conjugate pairs
// of |1 - e^{2 pi i q}|^2, multiplied in balanced order so intermediates
// stay tame. Returns the signed product (zero when 1 is an eigenvalue).
long double delta_product_oracle(const ExponentTuple& a) {
  auto counts = angle_counts_brute(a);
  std::vector<long double> factors;
  for (const auto& [key, c] : counts) {
    auto [num, den] = key;
    if (num == 0) return 0.0L;
    long double turn =
        static_cast<long double>(num) / static_cast<long double>(den);
    if (2 * num == den) {
      for (long long i = 0; i < c; ++i) factors.push_back(2.0L);  // angle 1/2
    } else if (2 * num < den) {
      long double pair =
          2.0L - 2.0L * std::cos(2.0L * 3.14159265358979323846L * turn);
      for (long long i = 0; i < c; ++i) factors.push_back(pair);
    }  // angles above 1/2 are the conjugates, already accounted for
  }
  std::sort(factors.begin(), factors.end());
  long double prod = 1.0L;
  std::size_t lo = 0, hi = factors.size();
  while (lo < hi) {
    if (prod <= 1.0L)
      prod *= factors[--hi];
    else
      prod *= factors[lo++];
  }
  return prod;
}

// Absolute residual for small values, relative above ~2^30: the product
// accumulates a relative error of a few thousand ulps, so an absolute 1e-6
// stops being float-realizable once the value is large (grid values reach
// hundreds of bits).
bool oracle_agrees(const BigNat& exact, long double oracle) {
  long double target = exact.to_long_double();
  if (exact.bit_length() <= 30)
    return std::abs(oracle - target) < 1e-6L &&
           static_cast<unsigned long long>(std::llroundl(oracle)) ==
               exact.to_u64();
  return std::abs(oracle - target) / target < 1e-6L;
}

}  // namespace

TEST_CASE("eigenvalue profile matches direct enumeration") {
  // (2,2,2): single tuple k = (1,1,1), angle 3/2 = 1/2 mod 1
  CyclotomicMultiset p222 = eigenvalue_multiset(parse_exponents("2,2,2"));
  CHECK(p222.total == 1);
  CHECK(p222.mult == std::map<long long, long long>{{2, 1}});

  // (2,2): k = (1,1), angle 0
  CyclotomicMultiset p22 = eigenvalue_multiset(parse_exponents("2,2"));
  CHECK(p22.total == 1);
  CHECK(p22.mult == std::map<long long, long long>{{1, 1}});

  CyclotomicMultiset p = eigenvalue_multiset(parse_exponents("3,4,2,2,2,2"));
  CHECK(p.total == 6);
  CHECK(expand_profile(p) == angle_counts_brute(parse_exponents("3,4,2,2,2,2")));

  // a broader spot check against the oracle
  for (const char* text : {"5,3", "4,4,3", "6,4,2", "2,3,4,5", "1,7,2", "6,6,6"}) {
    ExponentTuple a = parse_exponents(text);
    CHECK(expand_profile(eigenvalue_multiset(a)) == angle_counts_brute(a));
  }
}

TEST_CASE("milnor number") {
  CHECK(milnor_number(parse_exponents("2,2,2")) == 1);
  CHECK(milnor_number(parse_exponents("3,4,2,2,2,2")) == 6);
  CHECK(milnor_number(parse_exponents("5,2")) == 4);
  CHECK(milnor_number(parse_exponents("1,9,9")) == 0);
}

TEST_CASE("profile total equals the milnor number") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t len = 1 + rng() % 5;
    std::vector<long long> a(len);
    for (auto& x : a) x = 1 + static_cast<long long>(rng() % 6);
    ExponentTuple ea(a);
    CHECK(eigenvalue_multiset(ea).total == milnor_number(ea));
  }
}

TEST_CASE("delta at one") {
  CHECK(delta_at_one(parse_exponents("3,4,2,2,2,2")) == BigNat(1));
  CHECK(delta_at_one(parse_exponents("2,2,2")) == BigNat(2));
  CHECK(delta_at_one(parse_exponents("2,2")) == BigNat(0));
  CHECK(delta_at_one(parse_exponents("2,2,2,2,2,2,2")) == BigNat(2));
  CHECK(delta_at_one(parse_exponents("1,5")) == BigNat(1));  // empty spectrum
  CHECK(delta_at_one(parse_exponents("4,2,2")) == BigNat(4));
  // a deep prime-power stack: the value needs 244 bits
  BigNat big = delta_at_one(parse_exponents("6,6,6,6,5"));
  CHECK(big.bit_length() == 244);
  CHECK(big.decimal() ==
        "2465190328815661891911651766508706967728770109715696889907121658325"
        "1953125");
}

TEST_CASE("delta agrees with the floating-point product oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t len = 1 + rng() % 5;
    std::vector<long long> a(len);
    for (auto& x : a) x = 1 + static_cast<long long>(rng() % 6);
    ExponentTuple ea(a);
    CHECK(oracle_agrees(delta_at_one(ea), delta_product_oracle(ea)));
  }
}

TEST_CASE("delta is symmetric under permutation") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t len = 2 + rng() % 4;
    std::vector<long long> a(len);
    for (auto& x : a) x = 1 + static_cast<long long>(rng() % 6);
    BigNat base = delta_at_one(ExponentTuple(a));
    std::shuffle(a.begin(), a.end(), rng);
    CHECK(delta_at_one(ExponentTuple(a)) == base);
  }
}

TEST_CASE("sphere-link criterion") {
  CHECK(is_topological_sphere_link(parse_exponents("3,4,2,2,2,2")));
  CHECK_FALSE(is_topological_sphere_link(parse_exponents("2,2,2,2,2,2,2")));
  CHECK_THROWS_WITH_AS(is_topological_sphere_link(parse_exponents("3,2,2")),
                       doctest::Contains("n = 2"), CriterionInapplicable);
}

TEST_CASE("enumeration budget is enforced") {
  ExponentTuple big = parse_exponents("100,100,100,100");
  CHECK_THROWS_AS(eigenvalue_multiset(big, 1000), BudgetExceeded);
  CHECK_THROWS_AS(delta_at_one(big, 1000), BudgetExceeded);
  // raising the budget makes the same tuple computable
  CHECK(eigenvalue_multiset(parse_exponents("25,25"), 1000).total == 576);
}

TEST_CASE("cyclotomic helper values") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_at_one(2) == 2);
  CHECK(cyclotomic_at_one(9) == 3);
  CHECK(cyclotomic_at_one(6) == 1);
  CHECK(cyclotomic_at_one(12) == 1);
  CHECK(cyclotomic_at_one(13) == 13);
}
