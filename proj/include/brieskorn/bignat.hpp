#pragma once

// Minimal nonnegative big integer: products of small cyclotomic values can
// run to hundreds of bits, so the characteristic-polynomial evaluation needs
// more than a machine word. Little-endian 32-bit limbs; no limbs means zero.

#include <cstdint>
#include <string>
#include <vector>

namespace brieskorn {

class BigNat {
 public:
  BigNat() = default;
  BigNat(unsigned long long v) {  // NOLINT: implicit by design
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  void mul_word(std::uint32_t f) {
    if (f == 0) {
      limbs_.clear();
      return;
    }
    std::uint64_t carry = 0;
    for (std::uint32_t& l : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
      l = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  bool fits_u64() const { return limbs_.size() <= 2; }
  unsigned long long to_u64() const {
    unsigned long long v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
  }

  long double to_long_double() const {
    long double v = 0.0L;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      v = v * 4294967296.0L + static_cast<long double>(limbs_[i]);
    return v;
  }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
      ++bits;
      top >>= 1;
    }
    return bits;
  }

  std::string decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> tmp = limbs_;
    std::vector<std::uint32_t> groups;  // base 10^9 chunks, little-endian
    while (!tmp.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = tmp.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | tmp[i];
        tmp[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      groups.push_back(static_cast<std::uint32_t>(rem));
      while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
    }
    std::string out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
      std::string chunk = std::to_string(groups[i]);
      out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
  }

  friend bool operator==(const BigNat& x, const BigNat& y) {
    return x.limbs_ == y.limbs_;
  }
  friend bool operator!=(const BigNat& x, const BigNat& y) { return !(x == y); }

 private:
  std::vector<std::uint32_t> limbs_;
};

}  // namespace brieskorn
