#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brieskorn/jointop.hpp"

using namespace brieskorn;

namespace {

HomotopyType random_type(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: return HomotopyType::empty();
    case 1: return HomotopyType::point();
    default: return HomotopyType::sphere(static_cast<int>(rng() % 6));
  }
}

ReflectionTuple refl(const ExponentTuple& a, std::vector<long long> m) {
  return ReflectionTuple(std::move(m), a);
}

}  // namespace

TEST_CASE("join rules") {
  CHECK(join(HomotopyType::sphere(0), HomotopyType::sphere(0)) ==
        HomotopyType::sphere(1));
  CHECK(join(HomotopyType::point(), HomotopyType::sphere(5)) ==
        HomotopyType::point());
  CHECK(join(HomotopyType::empty(), HomotopyType::sphere(2)) ==
        HomotopyType::sphere(2));
  CHECK(join(HomotopyType::sphere(2), HomotopyType::empty()) ==
        HomotopyType::sphere(2));
  CHECK(join(HomotopyType::point(), HomotopyType::empty()) ==
        HomotopyType::point());
  CHECK(join(HomotopyType::empty(), HomotopyType::empty()) ==
        HomotopyType::empty());
  CHECK(join(HomotopyType::sphere(3), HomotopyType::sphere(2)) ==
        HomotopyType::sphere(6));
}

TEST_CASE("join is associative and commutative with identity empty") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    HomotopyType x = random_type(rng), y = random_type(rng),
                 z = random_type(rng);
    CHECK(join(x, y) == join(y, x));
    CHECK(join(join(x, y), z) == join(x, join(y, z)));
    CHECK(join(x, HomotopyType::empty()) == x);
  }
}

TEST_CASE("homotopy type of real Lagrangians") {
  ExponentTuple a2222 = parse_exponents("2,2,2,2");
  CHECK(lagrangian_homotopy_type(a2222, refl(a2222, {0, 0, 0, 0})) ==
        HomotopyType::sphere(3));
  CHECK(lagrangian_homotopy_type(a2222, refl(a2222, {0, 1, 1, 1})) ==
        HomotopyType::sphere(0));

  // parity rule for (k+1, 2, 2, 2) with reflection (0,1,1,1)
  for (long long k = 0; k <= 50; ++k) {
    ExponentTuple a({k + 1, 2, 2, 2});
    HomotopyType t = lagrangian_homotopy_type(a, refl(a, {0, 1, 1, 1}));
    if (k % 2 == 0)
      CHECK(t == HomotopyType::point());
    else
      CHECK(t == HomotopyType::sphere(0));
  }

  ExponentTuple a342 = parse_exponents("3,4,2");
  CHECK(lagrangian_homotopy_type(a342, refl(a342, {1, 2, 0})) ==
        HomotopyType::point());

  ExponentTuple a422 = parse_exponents("4,2,2");
  CHECK(lagrangian_homotopy_type(a422, refl(a422, {1, 1, 1})) ==
        HomotopyType::empty());

  ExponentTuple a22 = parse_exponents("2,2");
  CHECK(lagrangian_homotopy_type(a22, refl(a22, {1, 1})) ==
        HomotopyType::empty());
}

TEST_CASE("an odd exponent forces contractibility") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t len = 1 + rng() % 6;
    std::vector<long long> a(len), m(len);
    bool any_odd = false;
    for (std::size_t j = 0; j < len; ++j) {
      a[j] = 1 + static_cast<long long>(rng() % 8);
      if (a[j] % 2 == 1) any_odd = true;
      m[j] = static_cast<long long>(rng() % static_cast<unsigned long long>(a[j]));
    }
    ExponentTuple ea(a);
    HomotopyType t = lagrangian_homotopy_type(ea, refl(ea, m));
    if (any_odd) CHECK(t == HomotopyType::point());
    // sphere dimension never exceeds the fiber dimension
    if (t.is_sphere()) CHECK(t.sphere_dim() <= ea.fiber_dim());
  }
}

TEST_CASE("all even exponents admit an S^0 real Lagrangian") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t len = 1 + rng() % 6;
    std::vector<long long> a(len), m(len, 1);
    for (std::size_t j = 0; j < len; ++j)
      a[j] = 2 * (1 + static_cast<long long>(rng() % 4));
    m[0] = 0;
    ExponentTuple ea(a);
    CHECK(lagrangian_homotopy_type(ea, refl(ea, m)) == HomotopyType::sphere(0));
  }
}

TEST_CASE("component counts and reduced homology") {
  CHECK(component_count(HomotopyType::sphere(0)) == 2);
  CHECK(component_count(HomotopyType::point()) == 1);
  CHECK(component_count(HomotopyType::empty()) == 0);
  CHECK(component_count(HomotopyType::sphere(4)) == 1);

  CHECK(reduced_homology(HomotopyType::sphere(3)) ==
        std::map<int, long long>{{3, 1}});
  CHECK(reduced_homology(HomotopyType::point()).empty());
  CHECK(reduced_homology(HomotopyType::empty()).empty());
  CHECK(reduced_homology(HomotopyType::sphere(0)) ==
        std::map<int, long long>{{0, 1}});
}
