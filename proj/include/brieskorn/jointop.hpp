#pragma once

// Join calculus on homotopy types. The real Lagrangian of a coordinate-wise
// reflection is homotopy equivalent to the join of its zero-dimensional
// factors, so everything here is a symbolic fold over three-valued factor
// classes: no cell complexes are ever built.

#include <map>
#include <string>

#include "brieskorn/tuples.hpp"
#include "brieskorn/zerodim.hpp"

namespace brieskorn {

/// Empty set, point, or k-sphere (k >= 0).
class HomotopyType {
 public:
  enum class Tag { Empty, Point, Sphere };

  constexpr HomotopyType() = default;

  static constexpr HomotopyType empty() { return HomotopyType(Tag::Empty, -1); }
  static constexpr HomotopyType point() { return HomotopyType(Tag::Point, -1); }
  static HomotopyType sphere(int k) {
    if (k < 0) throw InternalError("negative sphere dimension");
    return HomotopyType(Tag::Sphere, k);
  }

  Tag tag() const { return tag_; }
  bool is_empty() const { return tag_ == Tag::Empty; }
  bool is_point() const { return tag_ == Tag::Point; }
  bool is_sphere() const { return tag_ == Tag::Sphere; }
  /// Contractible means nonempty with the homotopy type of a point.
  bool is_contractible() const { return tag_ == Tag::Point; }

  int sphere_dim() const {
    if (tag_ != Tag::Sphere) throw InternalError("sphere_dim of a non-sphere");
    return dim_;
  }

  std::string str() const {
    switch (tag_) {
      case Tag::Empty: return "empty";
      case Tag::Point: return "point";
      case Tag::Sphere: return "S^" + std::to_string(dim_);
    }
    return "?";
  }

  friend bool operator==(const HomotopyType& x, const HomotopyType& y) {
    return x.tag_ == y.tag_ && (x.tag_ != Tag::Sphere || x.dim_ == y.dim_);
  }
  friend bool operator!=(const HomotopyType& x, const HomotopyType& y) {
    return !(x == y);
  }

 private:
  constexpr HomotopyType(Tag t, int d) : tag_(t), dim_(d) {}

  Tag tag_ = Tag::Empty;
  int dim_ = -1;
};

/// Join of homotopy types: the empty set is the identity, a point absorbs,
/// and S^p * S^q = S^{p+q+1}.
inline HomotopyType join(HomotopyType x, HomotopyType y) {
  if (x.is_empty()) return y;
  if (y.is_empty()) return x;
  if (x.is_point() || y.is_point()) return HomotopyType::point();
  return HomotopyType::sphere(x.sphere_dim() + y.sphere_dim() + 1);
}

inline HomotopyType factor_type(const ZeroDimClass& c) {
  switch (c.tag) {
    case FactorClass::Empty: return HomotopyType::empty();
    case FactorClass::Point: return HomotopyType::point();
    case FactorClass::PairOfPoints: return HomotopyType::sphere(0);
  }
  return HomotopyType::empty();
}

/// Homotopy type of the real Lagrangian Fix R_m^a: left-to-right join of the
/// zero-dimensional factor types.
inline HomotopyType lagrangian_homotopy_type(const ExponentTuple& a,
                                             const ReflectionTuple& m) {
  if (a.size() != m.size())
    throw InputError("exponent/reflection length mismatch");
  HomotopyType acc = HomotopyType::empty();
  for (std::size_t j = 0; j < a.size(); ++j)
    acc = join(acc, factor_type(classify_zero_dim(a[j], m[j])));
  return acc;
}

inline int component_count(HomotopyType h) {
  if (h.is_empty()) return 0;
  if (h.is_sphere() && h.sphere_dim() == 0) return 2;
  return 1;
}

/// Reduced homology ranks, nonzero degrees only.
inline std::map<int, long long> reduced_homology(HomotopyType h) {
  std::map<int, long long> out;
  if (h.is_sphere()) out[h.sphere_dim()] = 1;
  return out;
}

}  // namespace brieskorn
