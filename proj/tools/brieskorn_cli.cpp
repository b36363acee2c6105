// Command-line frontend. Subcommands mirror the library modules; every
// command offers --json with a stable schema: top-level keys are command,
// input, payload, warnings. Exact quantities are integers or {num, den}
// pairs; floating point appears only in verification residuals.
//
// Exit codes: 0 success, 1 input error, 2 verification failure,
// 3 hypothesis rejection.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brieskorn/brieskorn.hpp"

using json = nlohmann::json;
using namespace brieskorn;

namespace {

json rational_json(const Rational& r) {
  return json{{"num", r.num()}, {"den", r.den()}};
}

json angle_json(const RationalAngle& q) {
  return json{{"num", q.num()}, {"den", q.den()}};
}

json report_json(const VerificationReport& r) {
  return json{{"check", r.check},
              {"attempted", r.attempted},
              {"passed", r.passed},
              {"max_residual", r.max_residual},
              {"tolerance", r.tolerance},
              {"pass", r.pass},
              {"skipped", r.skipped},
              {"note", r.note}};
}

void emit(const std::string& command, const json& input, const json& payload,
          const std::vector<std::string>& warnings, bool as_json) {
  if (!as_json) return;
  json doc{{"command", command},
           {"input", input},
           {"payload", payload},
           {"warnings", warnings}};
  std::cout << doc.dump(2) << "\n";
}

long long enumeration_budget(std::optional<long long> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BRIESKORN_BUDGET"))
    return Rational::parse(env).num();
  return kDefaultEnumerationBudget;
}

int run_invariants(const std::string& a_text, bool as_json,
                   std::optional<long long> budget_flag) {
  ExponentTuple a = parse_exponents(a_text);
  long long budget = enumeration_budget(budget_flag);
  CyclotomicMultiset profile = eigenvalue_multiset(a, budget);
  long long mu = milnor_number(a);
  BigNat d1 = delta_at_one(a, budget);
  PiUnits period = reeb_period(a);

  json sphere;
  std::string sphere_text;
  if (a.size() < 4) {
    sphere = json{{"applicable", false},
                  {"reason", "n = " + std::to_string(a.fiber_dim()) + " < 3"}};
    sphere_text = "inapplicable (n = " + std::to_string(a.fiber_dim()) + " < 3)";
  } else {
    bool is_sphere = is_topological_sphere_link(a, budget);
    sphere = json{{"applicable", true}, {"value", is_sphere}};
    sphere_text = is_sphere ? "yes" : "no";
  }

  if (as_json) {
    json prof = json::array();
    for (const auto& [d, m] : profile.mult)
      prof.push_back(json{{"denominator", d}, {"multiplicity", m}});
    emit("invariants", json{{"a", a.entries()}},
         json{{"milnor_number", mu},
              {"eigenvalue_profile", prof},
              {"delta_at_one", d1.decimal()},
              {"sphere_link", sphere},
              {"reeb_period_pi", rational_json(period.value)}},
         {}, true);
  } else {
    std::cout << "exponents: " << a.str() << "\n";
    std::cout << "milnor number: " << mu << "\n";
    std::cout << "eigenvalue profile (denominator: multiplicity):";
    if (profile.mult.empty()) std::cout << " none";
    for (const auto& [d, m] : profile.mult) std::cout << " " << d << ":" << m;
    std::cout << "\n";
    std::cout << "delta(1): " << d1.decimal() << "\n";
    std::cout << "topological sphere link: " << sphere_text << "\n";
    std::cout << "reeb period: " << period.str() << " pi\n";
  }
  return 0;
}

int run_lagrangian(const std::string& a_text, const std::string& m_text,
                   bool as_json) {
  ExponentTuple a = parse_exponents(a_text);
  ReflectionTuple m = parse_reflection(m_text, a);
  HomotopyType type = lagrangian_homotopy_type(a, m);

  if (as_json) {
    json factors = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) {
      ZeroDimClass c = classify_zero_dim(a[j], m[j]);
      json pts = json::array();
      for (const RationalAngle& q : c.points) pts.push_back(angle_json(q));
      factors.push_back(json{{"class", to_string(c.tag)}, {"points", pts}});
    }
    json homology = json::array();
    for (const auto& [deg, rank] : reduced_homology(type))
      homology.push_back(json{{"degree", deg}, {"rank", rank}});
    emit("lagrangian", json{{"a", a.entries()}, {"m", m.entries()}},
         json{{"factors", factors},
              {"homotopy_type", type.str()},
              {"components", component_count(type)},
              {"reduced_homology", homology}},
         {}, true);
  } else {
    std::cout << "exponents: " << a.str() << "  reflection: " << m.str() << "\n";
    for (std::size_t j = 0; j < a.size(); ++j) {
      ZeroDimClass c = classify_zero_dim(a[j], m[j]);
      std::cout << "factor " << j << ": " << to_string(c.tag);
      if (!c.points.empty()) {
        std::cout << " at";
        for (const RationalAngle& q : c.points) std::cout << " " << q.str();
        std::cout << " turns";
      }
      std::cout << "\n";
    }
    std::cout << "homotopy type: " << type.str() << "\n";
    std::cout << "components: " << component_count(type) << "\n";
    std::cout << "reduced homology:";
    auto hom = reduced_homology(type);
    if (hom.empty()) std::cout << " trivial";
    for (const auto& [deg, rank] : hom)
      std::cout << " degree " << deg << " rank " << rank;
    std::cout << "\n";
  }
  return 0;
}

int run_chords(const std::string& a_text, const std::string& m_text,
               std::optional<std::string> action_text, bool as_json) {
  ExponentTuple a = parse_exponents(a_text);
  ReflectionTuple m = parse_reflection(m_text, a);
  std::vector<ChordStratum> strata = chord_strata(a, m);
  Rational proxy = growth_proxy(a, m);
  std::optional<PiUnits> action;
  std::optional<long long> count;
  if (action_text) {
    action = PiUnits(Rational::parse(*action_text));
    count = chord_count(a, m, *action);
  }

  if (as_json) {
    json list = json::array();
    for (const ChordStratum& s : strata) {
      std::string rays;
      for (Ray r : s.rays) rays += (r == Ray::Primary ? '+' : '-');
      list.push_back(json{{"support", s.support},
                          {"rays", rays},
                          {"signs", s.signs},
                          {"lattice_gen", s.lattice_gen}});
    }
    json payload{{"strata", list},
                 {"stratum_count", strata.size()},
                 {"growth_proxy_per_pi", rational_json(proxy)},
                 {"reeb_period_pi", rational_json(reeb_period(a).value)}};
    json input{{"a", a.entries()}, {"m", m.entries()}};
    if (action) {
      input["action_pi"] = rational_json(action->value);
      payload["chord_count"] = *count;
    }
    emit("chords", input, payload, {}, true);
  } else {
    std::cout << "exponents: " << a.str() << "  reflection: " << m.str() << "\n";
    std::cout << "strata: " << strata.size() << "\n";
    for (const ChordStratum& s : strata) {
      std::cout << "  J={";
      for (std::size_t i = 0; i < s.support.size(); ++i)
        std::cout << (i ? "," : "") << s.support[i];
      std::cout << "} rays=";
      for (Ray r : s.rays) std::cout << (r == Ray::Primary ? '+' : '-');
      std::cout << " signs=";
      for (int sg : s.signs) std::cout << (sg > 0 ? '+' : '-');
      std::cout << " lattice=" << s.lattice_gen << " pi\n";
    }
    if (count)
      std::cout << "chord count up to " << action->str() << " pi: " << *count
                << "\n";
    std::cout << "growth proxy: " << proxy.str() << " per pi\n";
  }
  return 0;
}

json certificate_json(const Certificate& cert) {
  json steps = json::array();
  for (const ExtensionStep& s : cert.steps)
    steps.push_back(json{{"exponent", s.exponent},
                         {"reflection_index", s.reflection_index},
                         {"factor", to_string(s.factor)},
                         {"homotopy_type", s.type_after.str()},
                         {"component_contractible", s.component_contractible},
                         {"normal_structure_ok", s.normal_structure_ok}});
  return json{{"accepted", true},
              {"permutation", cert.permutation},
              {"arranged", cert.arranged},
              {"base", cert.base},
              {"base_reflection", cert.base_reflection},
              {"base_k", cert.base_k},
              {"base_homotopy_type", cert.base_type.str()},
              {"component_type", cert.component_type.str()},
              {"axiom",
               json{{"name", cert.axiom.name},
                    {"statement", cert.axiom.statement},
                    {"citation", cert.axiom.citation}}},
              {"steps", steps},
              {"conclusion", cert.conclusion}};
}

int run_certify(const std::string& a_text, bool as_json) {
  ExponentTuple a = parse_exponents(a_text);
  try {
    Certificate cert = build_certificate(a);
    if (as_json) {
      emit("certify", json{{"a", a.entries()}}, certificate_json(cert), {},
           true);
    } else {
      std::cout << "accepted: " << a.str() << "\n";
      std::cout << "arranged: " << detail::format_int_list(cert.arranged)
                << " (permutation of the input)\n";
      std::cout << "base: " << detail::format_int_list(cert.base)
                << " with reflection 0,1,1,1 -> " << cert.base_type.str()
                << " (k = " << cert.base_k << ")\n";
      std::cout << "axiom: " << cert.axiom.name << " " << cert.axiom.citation
                << "\n";
      for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const ExtensionStep& s = cert.steps[i];
        std::cout << "step " << (i + 1) << ": extend by " << s.exponent
                  << " at reflection index " << s.reflection_index
                  << ", factor " << to_string(s.factor) << ", type "
                  << s.type_after.str() << ", component contractible, "
                  << (s.normal_structure_ok ? "normal structure ok"
                                            : "normal structure NOT ok")
                  << "\n";
      }
      std::cout << "conclusion: " << cert.conclusion << "\n";
    }
    return 0;
  } catch (const HypothesesRejected& rej) {
    if (as_json) {
      emit("certify", json{{"a", a.entries()}},
           json{{"accepted", false}, {"reason", rej.what()}}, {}, true);
    } else {
      std::cerr << "rejected: " << rej.what() << "\n";
    }
    return 3;
  }
}

int run_verify(const std::string& a_text, const std::string& m_text,
               long long samples, unsigned long long seed, double tol,
               bool as_json, bool inject_fault) {
  ExponentTuple a = parse_exponents(a_text);
  ReflectionTuple m = parse_reflection(m_text, a);
  HomotopyType type = lagrangian_homotopy_type(a, m);

  std::vector<std::string> warnings;
  std::vector<VerificationReport> reports;

  if (type.is_empty()) {
    warnings.push_back("empty Lagrangian: round-trip, retraction and "
                       "component checks skipped");
  } else {
    std::vector<SamplePoint> points = sample_lagrangian(a, m, samples, seed);
    if (inject_fault) {
      for (SamplePoint& p : points) p.coords[0] += Complex(1e-3, 0.0);
      warnings.push_back("fault injection active: samples were perturbed");
    }
    reports.push_back(verify_round_trip(a, m, points, tol));
    reports.push_back(verify_retraction(a, m, samples, seed, tol));
  }

  reports.push_back(verify_forms(a, m, samples, seed, std::min(tol, 1e-12)));
  for (VerificationReport& r : verify_reeb(a, m, samples, seed, tol))
    reports.push_back(std::move(r));

  if (!type.is_empty()) {
    if (a.fiber_dim() <= 3) {
      VerificationReport comp;
      comp.check = "component-count";
      comp.tolerance = 0.0;
      comp.attempted = 1;
      long long estimated = estimate_components(a, m, std::max<long long>(samples, 600), seed);
      long long expected = component_count(type);
      comp.passed = estimated == expected ? 1 : 0;
      comp.pass = comp.passed == 1;
      comp.note = "estimated " + std::to_string(estimated) + ", join calculus " +
                  std::to_string(expected);
      reports.push_back(comp);
    } else {
      warnings.push_back("component check skipped: n > 3 cost guard");
    }
  }

  bool all_pass = true;
  for (const VerificationReport& r : reports) all_pass &= r.pass;

  if (as_json) {
    json list = json::array();
    for (const VerificationReport& r : reports) list.push_back(report_json(r));
    emit("verify",
         json{{"a", a.entries()},
              {"m", m.entries()},
              {"samples", samples},
              {"seed", seed},
              {"tolerance", tol}},
         json{{"homotopy_type", type.str()},
              {"reports", list},
              {"all_passed", all_pass}},
         warnings, true);
  } else {
    std::cout << "exponents: " << a.str() << "  reflection: " << m.str()
              << "  type: " << type.str() << "\n";
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
    for (const VerificationReport& r : reports) {
      std::cout << (r.skipped ? "[skip] " : (r.pass ? "[pass] " : "[FAIL] "))
                << r.check << ": " << r.passed << "/" << r.attempted
                << " max residual " << r.max_residual << " (tol " << r.tolerance
                << ")";
      if (!r.note.empty()) std::cout << " - " << r.note;
      std::cout << "\n";
    }
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of Brieskorn Milnor fibers, their real "
               "Lagrangians, Reeb chords and growth certificates"};
  app.require_subcommand(1);

  std::string a_text, m_text;
  bool as_json = false;
  std::optional<long long> budget;
  std::optional<std::string> action;
  long long samples = 1000;
  unsigned long long seed = 1;
  double tol = kDefaultTolerance;
  bool inject_fault = false;

  CLI::App* invariants =
      app.add_subcommand("invariants", "monodromy eigenvalues, delta(1), "
                                       "sphere-link verdict, Reeb period");
  invariants->add_option("a", a_text, "comma-separated exponents")->required();
  invariants->add_flag("--json", as_json, "JSON output");
  long long budget_value = 0;
  CLI::Option* budget_opt = invariants->add_option(
      "--budget", budget_value, "enumeration budget (default 10^7)");

  CLI::App* lagrangian = app.add_subcommand(
      "lagrangian", "factor classes, homotopy type, components, homology");
  lagrangian->add_option("a", a_text, "comma-separated exponents")->required();
  lagrangian->add_option("--m", m_text, "comma-separated reflection")->required();
  lagrangian->add_flag("--json", as_json, "JSON output");

  CLI::App* chords = app.add_subcommand(
      "chords", "Reeb chord strata, counts and the growth proxy");
  chords->add_option("a", a_text, "comma-separated exponents")->required();
  chords->add_option("--m", m_text, "comma-separated reflection")->required();
  chords->add_option("--action", action,
                     "action bound in pi-units (integer or p/q)");
  chords->add_flag("--json", as_json, "JSON output");

  CLI::App* certify = app.add_subcommand(
      "certify", "check hypotheses and build the reduction certificate");
  certify->add_option("a", a_text, "comma-separated exponents")->required();
  certify->add_flag("--json", as_json, "JSON output");

  CLI::App* verify = app.add_subcommand(
      "verify", "floating-point verification of maps, forms and flows");
  verify->add_option("a", a_text, "comma-separated exponents")->required();
  verify->add_option("--m", m_text, "comma-separated reflection")->required();
  verify->add_option("--samples", samples, "samples per check");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--tol", tol, "residual tolerance");
  verify->add_flag("--json", as_json, "JSON output");
  verify->add_flag("--inject-fault", inject_fault,
                   "perturb samples to exercise the failure exit path")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (invariants->parsed())
      return run_invariants(a_text, as_json,
                            budget_opt->count() ? std::optional<long long>(budget_value)
                                                : std::nullopt);
    if (lagrangian->parsed()) return run_lagrangian(a_text, m_text, as_json);
    if (chords->parsed()) return run_chords(a_text, m_text, action, as_json);
    if (certify->parsed()) return run_certify(a_text, as_json);
    if (verify->parsed())
      return run_verify(a_text, m_text, samples, seed, tol, as_json,
                        inject_fault);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
