#pragma once

// Fixed sets of the reflection R_m^a on the zero-dimensional fiber
// {z in C : z^a = 1}. R_m^a is the reflection about the line through the
// origin and e^{m pi i / a}; its fixed roots of unity drive the join
// calculus, while the fixed *line* (two rays) drives the chord and
// sampling layers.

#include <vector>

#include "brieskorn/rational.hpp"

namespace brieskorn {

enum class FactorClass { Empty, Point, PairOfPoints };

/// The two half-lines of the fixed line of R_m^a.
enum class Ray { Primary, Opposite };

inline const char* to_string(FactorClass c) {
  switch (c) {
    case FactorClass::Empty: return "empty";
    case FactorClass::Point: return "point";
    case FactorClass::PairOfPoints: return "pair";
  }
  return "?";
}

struct ZeroDimClass {
  FactorClass tag = FactorClass::Empty;
  std::vector<RationalAngle> points;  // fixed a-th roots of unity, ascending
};

namespace detail {
inline void check_reflection_range(long long a, long long m) {
  if (a < 1) throw InputError("exponent must be >= 1");
  if (m < 0 || m >= a)
    throw InputError("reflection entry " + std::to_string(m) +
                     " out of range 0.." + std::to_string(a - 1));
}
}  // namespace detail

/// Angle (in turns) of the requested half-line of the fixed line of R_m^a.
inline RationalAngle ray_angle(long long a, long long m, Ray ray) {
  detail::check_reflection_range(a, m);
  return ray == Ray::Primary ? RationalAngle(m, 2 * a)
                             : RationalAngle(m + a, 2 * a);
}

/// Sign of z^a for z != 0 on the requested half-line: the a-th power of a
/// point at angle q lands at angle a*q, which is 0 or 1/2 mod 1 on a fixed
/// ray.
inline int ray_sign(long long a, long long m, Ray ray) {
  detail::check_reflection_range(a, m);
  long long parity = (ray == Ray::Primary) ? m : m + a;
  return parity % 2 == 0 ? +1 : -1;
}

/// Fixed a-th roots of unity of R_m^a. The candidate angles are m/(2a) and
/// m/(2a) + 1/2; each is an a-th root of unity exactly when the matching
/// parity condition holds.
inline ZeroDimClass classify_zero_dim(long long a, long long m) {
  detail::check_reflection_range(a, m);
  ZeroDimClass out;
  if (m % 2 == 0) out.points.push_back(RationalAngle(m, 2 * a));
  if ((m + a) % 2 == 0) out.points.push_back(RationalAngle(m + a, 2 * a));
  if (out.points.size() == 2 && !(out.points[0] < out.points[1]))
    std::swap(out.points[0], out.points[1]);
  out.tag = out.points.empty()    ? FactorClass::Empty
            : out.points.size() == 1 ? FactorClass::Point
                                     : FactorClass::PairOfPoints;
  return out;
}

/// Signs attainable by z^a, z != 0, on the fixed line of R_m^a.
struct SignSet {
  bool plus = false;
  bool minus = false;

  bool mixed() const { return plus && minus; }
  bool contains(int sign) const { return sign > 0 ? plus : minus; }
};

inline SignSet sign_set(long long a, long long m) {
  SignSet s;
  for (Ray ray : {Ray::Primary, Ray::Opposite}) {
    if (ray_sign(a, m, ray) > 0)
      s.plus = true;
    else
      s.minus = true;
  }
  return s;
}

}  // namespace brieskorn
