#pragma once

// Hypothesis checking and certificate construction for the volume-growth
// reduction. An accepted tuple is rearranged into a base (k+1, 2, 2, 2)
// carrying the reflection (0, 1, 1, 1), whose fixed set is a point or S^0
// with contractible components, followed by even one-coordinate extensions
// with reflection entry 1. Each extension contributes an empty
// zero-dimensional factor, so the homotopy type never changes, and the
// Smith-type proxy inequality holds step by step. Positivity of the base
// growth rate is an imported result, recorded as a named axiom with its
// citation rather than recomputed.

#include <algorithm>
#include <string>
#include <vector>

#include "brieskorn/jointop.hpp"
#include "brieskorn/tuples.hpp"
#include "brieskorn/zerodim.hpp"

namespace brieskorn {

struct HypothesisVerdict {
  bool accepted = false;
  std::string reason;  // first failing clause; empty when accepted
};

/// Raised by build_certificate when the hypotheses fail.
struct HypothesesRejected : std::runtime_error {
  explicit HypothesesRejected(const std::string& why)
      : std::runtime_error(why) {}
};

/// Clauses, in order: fiber dimension n >= 3; at least three exponents equal
/// to 2; at most one odd exponent.
inline HypothesisVerdict check_volume_growth_hypotheses(
    const ExponentTuple& a) {
  if (a.size() < 4)
    return {false, "n = " + std::to_string(a.fiber_dim()) +
                       " < 3 (need fiber dimension at least 3)"};
  long long twos = 0, odds = 0;
  for (long long aj : a.entries()) {
    if (aj == 2) ++twos;
    if (aj % 2 == 1) ++odds;
  }
  if (twos < 3)
    return {false, "only " + std::to_string(twos) +
                       " exponents equal 2 (need at least three)"};
  if (odds > 1)
    return {false,
            std::to_string(odds) + " odd exponents (at most one allowed)"};
  return {true, ""};
}

struct AxiomRecord {
  std::string name;
  std::string statement;
  std::string citation;
};

struct ExtensionStep {
  long long exponent = 0;          // even entry appended at this step
  long long reflection_index = 1;  // reflection entry for the new coordinate
  FactorClass factor = FactorClass::Empty;
  HomotopyType type_after;
  bool component_contractible = false;
  bool normal_structure_ok = false;  // contractible component and n >= 3
};

struct Certificate {
  ExponentTuple input;
  std::vector<std::size_t> permutation;  // arranged[i] = input[permutation[i]]
  std::vector<long long> arranged;

  std::vector<long long> base;             // (k+1, 2, 2, 2)
  std::vector<long long> base_reflection;  // (0, 1, 1, 1)
  long long base_k = 0;
  HomotopyType base_type;       // point (k even) or S^0 (k odd)
  HomotopyType component_type;  // always a point: components are contractible

  AxiomRecord axiom;
  std::vector<ExtensionStep> steps;
  std::string conclusion;

  ExponentTuple final_exponents() const { return ExponentTuple(arranged); }

  ReflectionTuple final_reflection() const {
    std::vector<long long> m = base_reflection;
    for (std::size_t i = 4; i < arranged.size(); ++i) m.push_back(1);
    return ReflectionTuple(std::move(m), final_exponents());
  }
};

/// Builds the audited reduction chain for an accepted tuple. The head of the
/// rearrangement is the odd entry when one exists, otherwise the largest
/// entry (first occurrence); it is followed by three 2's and then the
/// remaining entries in input order, all even.
inline Certificate build_certificate(const ExponentTuple& a) {
  HypothesisVerdict verdict = check_volume_growth_hypotheses(a);
  if (!verdict.accepted) throw HypothesesRejected(verdict.reason);

  const std::size_t width = a.size();
  std::size_t head = width;
  for (std::size_t j = 0; j < width; ++j)
    if (a[j] % 2 == 1) {
      head = j;
      break;
    }
  if (head == width) {
    head = 0;
    for (std::size_t j = 1; j < width; ++j)
      if (a[j] > a[head]) head = j;
  }

  std::vector<std::size_t> perm{head};
  for (std::size_t j = 0; j < width && perm.size() < 4; ++j)
    if (j != head && a[j] == 2) perm.push_back(j);
  if (perm.size() < 4)
    throw InternalError("accepted tuple lacks three free 2's");
  for (std::size_t j = 0; j < width; ++j)
    if (std::find(perm.begin(), perm.end(), j) == perm.end())
      perm.push_back(j);

  Certificate cert{.input = a,
                   .permutation = perm,
                   .arranged = {},
                   .base = {},
                   .base_reflection = {0, 1, 1, 1},
                   .base_k = 0,
                   .base_type = HomotopyType::empty(),
                   .component_type = HomotopyType::point(),
                   .axiom = {},
                   .steps = {},
                   .conclusion = {}};
  for (std::size_t j : perm) cert.arranged.push_back(a[j]);
  cert.base.assign(cert.arranged.begin(), cert.arranged.begin() + 4);
  cert.base_k = cert.base[0] - 1;

  ExponentTuple base_a(cert.base);
  ReflectionTuple base_m(cert.base_reflection, base_a);
  cert.base_type = lagrangian_homotopy_type(base_a, base_m);
  HomotopyType expected = (cert.base_k % 2 == 0)
                              ? HomotopyType::point()
                              : HomotopyType::sphere(0);
  if (cert.base_type != expected)
    throw InternalError("base homotopy type disagrees with the parity rule");

  cert.axiom = AxiomRecord{
      .name = "base-growth-rate-positivity",
      .statement =
          "Each connected component of the base real Lagrangian, a cotangent "
          "fiber of the A_k fiber under the plumbing identification, has "
          "positive linear growth rate of filtered wrapped Floer homology.",
      .citation = "[KKL18, Section 7]"};

  std::vector<long long> running_a = cert.base;
  std::vector<long long> running_m = cert.base_reflection;
  for (std::size_t i = 4; i < cert.arranged.size(); ++i) {
    long long b = cert.arranged[i];
    if (b % 2 != 0)
      throw InternalError("extension exponent " + std::to_string(b) +
                          " is odd");
    ExtensionStep step;
    step.exponent = b;
    step.reflection_index = 1;
    step.factor = classify_zero_dim(b, 1).tag;
    if (step.factor != FactorClass::Empty)
      throw InternalError("extension factor is not empty");

    running_a.push_back(b);
    running_m.push_back(1);
    ExponentTuple ext_a(running_a);
    ReflectionTuple ext_m(running_m, ext_a);
    step.type_after = lagrangian_homotopy_type(ext_a, ext_m);
    if (step.type_after != cert.base_type)
      throw InternalError("homotopy type changed across an empty extension");
    step.component_contractible = true;  // point or S^0: components are points
    step.normal_structure_ok = ext_a.fiber_dim() - 1 >= 3;
    cert.steps.push_back(step);
  }

  cert.conclusion =
      "Input " + a.str() + " rearranged to " +
      detail::format_int_list(cert.arranged) + ". Base (" +
      detail::format_int_list(cert.base) + ") with reflection (0,1,1,1) has "
      "fixed set of type " + cert.base_type.str() +
      "; any connected component is contractible. Growth-rate positivity of "
      "the base component is imported: " + cert.axiom.citation + ". Each of "
      "the " + std::to_string(cert.steps.size()) + " even extension(s) keeps "
      "an empty factor at reflection index 1, so the homotopy type and the "
      "component contractibility persist, and the Smith inequality chain "
      "applies at every step (stably trivial normal structures exist because "
      "the invariant component is contractible and n >= 3). Conditional on "
      "the recorded axiom: the full fiber admits an admissible Lagrangian "
      "with positive linear growth rate, and every compactly supported "
      "symplectomorphism in a nonzero power of the fibered-twist class has "
      "n-dimensional slow volume growth at least 1.";
  return cert;
}

}  // namespace brieskorn
