#pragma once

// Exact rational scalars. Angles are fractions of a full turn, actions and
// times are rationals in units of pi, so the combinatorial layer never
// touches floating point.

#include <cstdint>
#include <numeric>
#include <string>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace detail {

inline long long narrow128(__int128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw InternalError(std::string("integer overflow in ") + ctx);
  return static_cast<long long>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  /// Largest integer <= value.
  long long floor() const {
    if (num_ >= 0) return num_ / den_;
    return -(((-num_) + den_ - 1) / den_);
  }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return make128(static_cast<__int128>(x.num_) * y.den_ +
                       static_cast<__int128>(y.num_) * x.den_,
                   static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return x + (-y);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return make128(static_cast<__int128>(x.num_) * y.num_,
                   static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw InternalError("rational division by zero");
    return make128(static_cast<__int128>(x.num_) * y.den_,
                   static_cast<__int128>(x.den_) * y.num_);
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) {
    return !(x == y);
  }
  friend bool operator<(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num_) * y.den_ <
           static_cast<__int128>(y.num_) * x.den_;
  }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return !(y < x);
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator>=(const Rational& x, const Rational& y) {
    return !(x < y);
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p" or "p/q". Used for exact command-line quantities.
  static Rational parse(const std::string& text);

 private:
  void assign(long long num, long long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    __int128 n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = detail::narrow128(n, "rational");
    den_ = detail::narrow128(d, "rational");
  }

  static Rational make128(__int128 n, __int128 d) {
    if (d == 0) throw InternalError("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::narrow128(n, "rational");
    r.den_ = detail::narrow128(d, "rational");
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
  auto parse_ll = [](const std::string& tok) -> long long {
    if (tok.empty()) throw InputError("invalid rational: empty token");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw InputError("invalid integer '" + tok + "'");
    }
    if (pos != tok.size()) throw InputError("invalid integer '" + tok + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_ll(text));
  long long n = parse_ll(text.substr(0, slash));
  long long d = parse_ll(text.substr(slash + 1));
  if (d == 0) throw InputError("invalid rational '" + text + "': zero denominator");
  return Rational(n, d);
}

/// Fraction q of a full turn, reduced, with 0 <= q < 1; stands for the
/// point e^{2 pi i q} on the unit circle.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(long long num, long long den) {
    if (den == 0) throw InputError("angle with zero denominator");
    __int128 n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = detail::narrow128(n, "angle");
    den_ = detail::narrow128(d, "angle");
  }
  explicit RationalAngle(const Rational& q) : RationalAngle(q.num(), q.den()) {}

  long long num() const { return num_; }
  long long den() const { return den_; }
  Rational as_rational() const { return Rational(num_, den_); }

  /// Angle in turns, in [0, 1).
  double turns() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend RationalAngle operator+(const RationalAngle& x,
                                 const RationalAngle& y) {
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    __int128 n = static_cast<__int128>(x.num_) * y.den_ +
                 static_cast<__int128>(y.num_) * x.den_;
    n %= d;
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    RationalAngle r;
    r.num_ = detail::narrow128(n, "angle sum");
    r.den_ = detail::narrow128(d, "angle sum");
    return r;
  }

  /// Integer multiple, reduced mod 1.
  RationalAngle times(long long k) const {
    __int128 n = static_cast<__int128>(num_) * k;
    __int128 d = den_;
    n %= d;
    if (n < 0) n += d;
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    RationalAngle r;
    r.num_ = detail::narrow128(n, "angle multiple");
    r.den_ = detail::narrow128(d, "angle multiple");
    return r;
  }

  friend bool operator==(const RationalAngle& x, const RationalAngle& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const RationalAngle& x, const RationalAngle& y) {
    return !(x == y);
  }
  friend bool operator<(const RationalAngle& x, const RationalAngle& y) {
    return static_cast<__int128>(x.num_) * y.den_ <
           static_cast<__int128>(y.num_) * x.den_;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Action or time t recorded as t / pi.
struct PiUnits {
  Rational value;

  PiUnits() = default;
  explicit PiUnits(Rational v) : value(v) {}
  explicit PiUnits(long long v) : value(v) {}

  /// Absolute value in radians (floating point; verification layer only).
  double radians() const { return value.to_double() * 3.14159265358979323846; }

  friend bool operator==(const PiUnits& x, const PiUnits& y) {
    return x.value == y.value;
  }
  friend bool operator<(const PiUnits& x, const PiUnits& y) {
    return x.value < y.value;
  }

  std::string str() const { return value.str(); }
};

}  // namespace brieskorn
