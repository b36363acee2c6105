#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "brieskorn/verify.hpp"

using namespace brieskorn;

namespace {

ReflectionTuple refl(const ExponentTuple& a, std::vector<long long> m) {
  return ReflectionTuple(std::move(m), a);
}

}  // namespace

TEST_CASE("lagrangian samples satisfy their membership residuals") {
  for (const char* spec : {"3,2|2,0", "2,2,2|0,1,1", "3,4,2,2,2,2|0,1,1,1,1,1"}) {
    std::string s(spec);
    auto bar = s.find('|');
    ExponentTuple a = parse_exponents(s.substr(0, bar));
    ReflectionTuple m = parse_reflection(s.substr(bar + 1), a);
    for (const SamplePoint& p : sample_lagrangian(a, m, 500, 7)) {
      CHECK(p.space == SpaceTag::Fiber);
      CHECK(fiber_residual(a, p.coords) <= 1e-9);
      CHECK(fixed_set_residual(a, m, p.coords) <= 1e-9);
      // samples live on the nonnegative part
      for (std::size_t j = 0; j < p.coords.size(); ++j)
        CHECK(complex_pow(p.coords[j], a[j]).real() >= -1e-12);
    }
  }
}

TEST_CASE("sampling is reproducible from (seed, count)") {
  ExponentTuple a = parse_exponents("3,2");
  ReflectionTuple m = refl(a, {2, 0});
  auto p1 = sample_lagrangian(a, m, 50, 99);
  auto p2 = sample_lagrangian(a, m, 50, 99);
  REQUIRE(p1.size() == p2.size());
  for (std::size_t i = 0; i < p1.size(); ++i)
    for (std::size_t j = 0; j < p1[i].coords.size(); ++j)
      CHECK(p1[i].coords[j] == p2[i].coords[j]);
}

TEST_CASE("empty Lagrangians and bad counts are rejected") {
  ExponentTuple a = parse_exponents("2,2");
  CHECK_THROWS_WITH_AS(sample_lagrangian(a, refl(a, {1, 1}), 10, 1),
                       doctest::Contains("empty"), InputError);
  CHECK_THROWS_AS(sample_lagrangian(a, refl(a, {0, 0}), 0, 1), InputError);
}

TEST_CASE("explicit sample formula for (3,2)/(2,0)") {
  // weights (1/2, 1/2): z = ((1/2)^{1/3} e^{2 pi i/3}, (1/2)^{1/2} w)
  ExponentTuple a = parse_exponents("3,2");
  JoinCoords jc;
  jc.weights = {0.5, 0.5};
  jc.corners = {unit_circle(RationalAngle(1, 3)), unit_circle(RationalAngle(0, 1))};
  std::vector<Complex> z = join_to_fiber(a, jc);
  CHECK(std::abs(z[0] - std::pow(0.5, 1.0 / 3.0) *
                            unit_circle(RationalAngle(1, 3))) < 1e-15);
  CHECK(std::abs(z[1] - std::sqrt(0.5)) < 1e-15);
  CHECK(fiber_residual(a, z) <= 1e-12);
}

TEST_CASE("round trip through join coordinates") {
  ExponentTuple a = parse_exponents("3,2");
  ReflectionTuple m = refl(a, {2, 0});

  // the corner point (1, 0) round-trips with zero deviation
  SamplePoint corner;
  corner.coords = {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  corner.coords[0] = unit_circle(RationalAngle(1, 3));
  VerificationReport zero = verify_round_trip(a, m, {corner}, 1e-15);
  CHECK(zero.pass);

  auto points = sample_lagrangian(a, m, 1000, 3);
  VerificationReport rep = verify_round_trip(a, m, points, 1e-9);
  CHECK(rep.pass);
  CHECK(rep.attempted == 1000);
  CHECK(rep.max_residual <= 1e-9);

  // negative control: a perturbed point must fail the residual check
  points[0].coords[0] += Complex(1e-3, 0.0);
  VerificationReport bad = verify_round_trip(a, m, points, 1e-9);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("retraction drives negative powers to zero on the fiber") {
  ExponentTuple a = parse_exponents("2,2,2");
  ReflectionTuple m = refl(a, {0, 1, 1});

  // explicit endpoint: z = (sqrt(2), i, 0) retracts to (1, 0, 0)
  std::vector<Complex> z = {Complex(std::sqrt(2.0), 0.0), Complex(0.0, 1.0),
                            Complex(0.0, 0.0)};
  CHECK(fiber_residual(a, z) <= 1e-12);
  std::vector<Complex> end = retract_to_nonnegative(a, z, {1}, 1.0);
  CHECK(std::abs(end[0] - Complex(1.0, 0.0)) <= 1e-12);
  CHECK(std::abs(end[1]) <= 1e-12);
  CHECK(std::abs(end[2]) <= 1e-12);

  // t = 0 is the identity, and nonnegative points never move
  std::vector<Complex> start = retract_to_nonnegative(a, z, {1}, 0.0);
  for (std::size_t j = 0; j < z.size(); ++j) CHECK(start[j] == z[j]);
  std::vector<Complex> nonneg = {Complex(1.0, 0.0), Complex(0.0, 0.0),
                                 Complex(0.0, 0.0)};
  for (double t : {0.0, 0.3, 1.0}) {
    std::vector<Complex> g = retract_to_nonnegative(a, nonneg, {}, t);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[j] == nonneg[j]);
  }

  VerificationReport rep = verify_retraction(a, m, 400, 11, 1e-9);
  CHECK(rep.pass);
  CHECK_FALSE(rep.skipped);
  CHECK(rep.max_residual <= 1e-9);
}

TEST_CASE("retraction is reported as skipped when vacuous") {
  ExponentTuple a = parse_exponents("2,2");
  VerificationReport rep = verify_retraction(a, refl(a, {0, 0}), 50, 1, 1e-9);
  CHECK(rep.skipped);
  CHECK(rep.pass);
}

TEST_CASE("liouville form identities") {
  ExponentTuple a = parse_exponents("3,4,2,2,2,2");
  ReflectionTuple m = refl(a, {0, 1, 1, 1, 1, 1});
  VerificationReport rep = verify_forms(a, m, 1000, 5, 1e-12);
  CHECK(rep.pass);
  CHECK(rep.max_residual <= 1e-12);

  // zero point: both sides vanish identically
  std::vector<Complex> zero(a.size(), Complex(0.0, 0.0));
  std::vector<Complex> v(a.size(), Complex(0.3, -0.7));
  CHECK(liouville_pairing(a, zero, v) == 0.0);

  // negative control: expecting + for the reflection must fail generically
  auto rng = sample_rng(5, 1);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Complex> z(a.size()), w(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    z[j] = Complex(uni(rng), uni(rng));
    w[j] = Complex(uni(rng), uni(rng));
  }
  double base = liouville_pairing(a, z, w);
  double refl_side =
      liouville_pairing(a, apply_reflection(a, m, z), apply_reflection(a, m, w));
  CHECK(std::abs(refl_side - base) > 1e-6);  // wrong sign convention fails
}

TEST_CASE("reeb flow identities and chord lattice") {
  ExponentTuple a = parse_exponents("2,2,2");
  ReflectionTuple m = refl(a, {0, 1, 1});
  auto reports = verify_reeb(a, m, 400, 13, 1e-9);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].check == "reeb-period-identity");
  CHECK(reports[0].pass);
  CHECK(reports[0].max_residual < 1e-10);
  CHECK(reports[1].check == "reeb-fiber-equivariance");
  CHECK(reports[1].pass);
  CHECK(reports[1].max_residual < 1e-10);
  CHECK(reports[2].check == "reeb-chord-lattice");
  CHECK(reports[2].pass);
  CHECK_FALSE(reports[2].skipped);
  CHECK(reports[2].attempted == 16);

  // no strata for the all-plus reflection: chord check skips
  auto skipped = verify_reeb(a, refl(a, {0, 0, 0}), 100, 13, 1e-9);
  CHECK(skipped[2].skipped);
  CHECK(skipped[2].pass);
}

TEST_CASE("explicit chord times for the stratum {0,1} of (2,2,2)/(0,1,1)") {
  ExponentTuple a = parse_exponents("2,2,2");
  ReflectionTuple m = refl(a, {0, 1, 1});
  // x^2 - y^2 = 0 with x^2 + y^2 = 1 on the rays of coordinates 0 and 1
  std::vector<Complex> z = {Complex(std::sqrt(0.5), 0.0),
                            Complex(0.0, std::sqrt(0.5)), Complex(0.0, 0.0)};
  CHECK(link_residual(a, z) <= 1e-12);
  CHECK(fixed_set_residual(a, m, z) <= 1e-12);
  // returning time 2 pi: both coordinates rotate by pi, staying on their lines
  CHECK(fixed_set_residual(a, m, reeb_flow(a, z, 2.0 * kPi)) <= 1e-12);
  // time pi rotates each coordinate by pi/2, off the fixed lines
  CHECK(fixed_set_residual(a, m, reeb_flow(a, z, kPi)) > 0.1);
}

TEST_CASE("component estimates agree with the join calculus") {
  ExponentTuple a222 = parse_exponents("2,2,2");
  CHECK(estimate_components(a222, refl(a222, {0, 1, 1}), 900, 17) == 2);

  ExponentTuple a2222 = parse_exponents("2,2,2,2");
  CHECK(estimate_components(a2222, refl(a2222, {0, 0, 0, 0}), 900, 17) == 1);

  ExponentTuple a22 = parse_exponents("2,2");
  CHECK_THROWS_WITH_AS(estimate_components(a22, refl(a22, {1, 1}), 100, 1),
                       doctest::Contains("empty"), InputError);

  ExponentTuple deep = parse_exponents("2,2,2,2,2,2");
  CHECK_THROWS_AS(estimate_components(deep, refl(deep, {0, 0, 0, 0, 0, 0}), 100, 1),
                  InputError);

  // a few shapes beyond the S^0 and sphere cases
  ExponentTuple a32 = parse_exponents("3,2");
  CHECK(estimate_components(a32, refl(a32, {2, 0}), 700, 19) == 1);
  ExponentTuple a44 = parse_exponents("4,4");
  CHECK(estimate_components(a44, refl(a44, {0, 0}), 700, 19) == 1);  // S^1
  ExponentTuple a42 = parse_exponents("4,2");
  CHECK(estimate_components(a42, refl(a42, {0, 1}), 700, 19) == 2);  // S^0
}

TEST_CASE("all-2 quadrics: numeric components for every reflection") {
  // the real variety behind the join calculus here is the quadric
  // x.x - y.y = 1, x.y = 0 restricted to the fixed lines
  for (std::size_t len = 2; len <= 4; ++len) {
    ExponentTuple a(std::vector<long long>(len, 2));
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::vector<long long> mv(len);
      for (std::size_t j = 0; j < len; ++j) mv[j] = (mask >> j) & 1u;
      ReflectionTuple m(mv, a);
      HomotopyType t = lagrangian_homotopy_type(a, m);
      if (t.is_empty()) continue;
      CHECK(estimate_components(a, m, 600, 99) == component_count(t));
    }
  }
}
