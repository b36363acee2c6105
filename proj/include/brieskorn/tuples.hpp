#pragma once

// Validated exponent and reflection tuples. The exponent tuple a defines
// the polynomial z_0^{a_0} + ... + z_n^{a_n}; the reflection tuple m picks
// the coordinate-wise reflection z_j -> e^{2 m_j pi i / a_j} conj(z_j).

#include <numeric>
#include <string>
#include <vector>

#include "brieskorn/rational.hpp"

namespace brieskorn {

namespace detail {

inline std::vector<long long> parse_int_list(const std::string& text,
                                             const char* what) {
  std::vector<long long> out;
  std::size_t start = 0;
  bool saw_token = false;
  auto take = [&](std::size_t from, std::size_t to) {
    std::string tok = text.substr(from, to - from);
    // trim ends
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t'))
      tok.erase(tok.begin());
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t'))
      tok.pop_back();
    if (tok.empty())
      throw InputError(std::string("empty ") + what + " entry");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw InputError(std::string("non-integer ") + what + " token '" + tok +
                       "'");
    }
    if (pos != tok.size())
      throw InputError(std::string("non-integer ") + what + " token '" + tok +
                       "'");
    out.push_back(v);
    saw_token = true;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ',') {
      take(start, i);
      start = i + 1;
    }
  }
  take(start, text.size());
  if (!saw_token) throw InputError(std::string("empty ") + what + " list");
  return out;
}

inline std::string format_int_list(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

/// The integer vector a = (a_0, ..., a_n), every entry >= 1.
class ExponentTuple {
 public:
  explicit ExponentTuple(std::vector<long long> entries)
      : a_(std::move(entries)) {
    if (a_.empty()) throw InputError("empty exponent list");
    for (std::size_t j = 0; j < a_.size(); ++j)
      if (a_[j] < 1)
        throw InputError("exponent entry " + std::to_string(a_[j]) +
                         " < 1 at position " + std::to_string(j));
  }

  std::size_t size() const { return a_.size(); }
  long long operator[](std::size_t j) const { return a_[j]; }
  const std::vector<long long>& entries() const { return a_; }

  /// Complex dimension n of the fiber (ambient dimension minus one).
  long long fiber_dim() const { return static_cast<long long>(a_.size()) - 1; }

  long long lcm() const {
    __int128 l = 1;
    for (long long aj : a_) {
      l = l / detail::gcd128(l, aj) * aj;
      if (l > INT64_MAX) throw InputError("lcm of exponents overflows");
    }
    return static_cast<long long>(l);
  }

  std::string str() const { return detail::format_int_list(a_); }

  friend bool operator==(const ExponentTuple& x, const ExponentTuple& y) {
    return x.a_ == y.a_;
  }

 private:
  std::vector<long long> a_;
};

/// The reflection vector m, same length as its exponent tuple, with
/// 0 <= m_j <= a_j - 1.
class ReflectionTuple {
 public:
  ReflectionTuple(std::vector<long long> entries, const ExponentTuple& a)
      : m_(std::move(entries)) {
    if (m_.size() != a.size())
      throw InputError("reflection length " + std::to_string(m_.size()) +
                       " does not match exponent length " +
                       std::to_string(a.size()));
    for (std::size_t j = 0; j < m_.size(); ++j)
      if (m_[j] < 0 || m_[j] >= a[j])
        throw InputError("reflection entry " + std::to_string(m_[j]) +
                         " out of range 0.." + std::to_string(a[j] - 1) +
                         " at position " + std::to_string(j));
  }

  std::size_t size() const { return m_.size(); }
  long long operator[](std::size_t j) const { return m_[j]; }
  const std::vector<long long>& entries() const { return m_; }

  std::string str() const { return detail::format_int_list(m_); }

  friend bool operator==(const ReflectionTuple& x, const ReflectionTuple& y) {
    return x.m_ == y.m_;
  }

 private:
  std::vector<long long> m_;
};

inline ExponentTuple parse_exponents(const std::string& text) {
  return ExponentTuple(detail::parse_int_list(text, "exponent"));
}

inline ReflectionTuple parse_reflection(const std::string& text,
                                        const ExponentTuple& a) {
  return ReflectionTuple(detail::parse_int_list(text, "reflection"), a);
}

inline std::string format_exponents(const ExponentTuple& a) { return a.str(); }
inline std::string format_reflection(const ReflectionTuple& m) {
  return m.str();
}

}  // namespace brieskorn
