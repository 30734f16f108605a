#pragma once

#include <random>
#include <string>
#include <vector>

#include "fowl/evaluator.hpp"
#include "fowl/kb_builder.hpp"
#include "fowl/owl_parser.hpp"

namespace testutil {

inline fowl::Rat rat(const std::string& text) {
  auto v = fowl::parse_decimal(text);
  if (!v) throw std::runtime_error("bad rational literal in test: " + text);
  return *v;
}

inline fowl::Degree deg(const std::string& text) { return fowl::Degree(rat(text)); }

inline fowl::owl::OwlDocument parse_ok(const std::string& text) {
  fowl::owl::ParseResult r = fowl::owl::parse_document(text);
  if (!r.ok()) {
    std::string msg = "unexpected parse errors:";
    for (const auto& d : r.diagnostics) msg += "\n  " + d.tsv();
    throw std::runtime_error(msg);
  }
  return std::move(r.document);
}

inline fowl::BuildResult build(const std::string& text) { return fowl::build_kb(parse_ok(text)); }

inline bool has_code(const std::vector<fowl::Diagnostic>& ds, const char* code) {
  for (const auto& d : ds)
    if (d.code == code) return true;
  return false;
}

inline std::size_t count_code(const std::vector<fowl::Diagnostic>& ds, const char* code) {
  std::size_t n = 0;
  for (const auto& d : ds)
    if (d.code == code) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Random material for property tests. A fixed KB provides two modifiers and
// two datatypes; interpretations and expressions are drawn small enough for
// the brute-force oracle.

inline fowl::Rat random_unit(std::mt19937& rng) {
  std::uniform_int_distribution<int> den_dist(1, 12);
  int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(0, den);
  return fowl::Rat(num_dist(rng), den);
}

inline fowl::FuzzyKB property_kb() {
  fowl::FuzzyKB kb;
  kb.modifiers.emplace("very", fowl::ModifierDef::linear(rat("0.8")));
  kb.modifier_order.push_back("very");
  kb.modifiers.emplace("roughly", fowl::ModifierDef::triangular(rat("0.2"), rat("0.5"), rat("0.8")));
  kb.modifier_order.push_back("roughly");
  kb.datatypes.emplace("Low", fowl::DatatypeExpr::from_shape(fowl::MembershipShape::left(
                                  rat("0"), rat("100"), rat("20"), rat("60"))));
  kb.datatype_order.push_back("Low");
  kb.datatypes.emplace("Mid", fowl::DatatypeExpr::from_shape(fowl::MembershipShape::triangular(
                                  rat("0"), rat("100"), rat("20"), rat("50"), rat("80"))));
  kb.datatype_order.push_back("Mid");
  return kb;
}

inline fowl::FiniteInterpretation random_interpretation(std::mt19937& rng) {
  fowl::FiniteInterpretation interp;
  std::uniform_int_distribution<int> domain_size(1, 4);
  int n = domain_size(rng);
  for (int i = 0; i < n; ++i) interp.domain.push_back("e" + std::to_string(i));
  std::uniform_int_distribution<int> value_count(0, 5);
  int nv = value_count(rng);
  for (int i = 0; i < nv; ++i) {
    fowl::Rat v = fowl::Rat(10) * random_unit(rng) + fowl::Rat(10 * i);
    if (std::find(interp.values.begin(), interp.values.end(), v) == interp.values.end())
      interp.values.push_back(v);
  }
  std::bernoulli_distribution keep(0.7);
  for (const char* name : {"A0", "A1", "A2"}) {
    interp.bound_concepts.insert(name);
    for (const auto& e : interp.domain)
      if (keep(rng)) interp.concept_table[{name, e}] = fowl::Degree(random_unit(rng));
  }
  for (const char* name : {"R0", "R1"}) {
    interp.bound_roles.insert(name);
    for (const auto& a : interp.domain)
      for (const auto& b : interp.domain)
        if (keep(rng)) interp.role_table[{name, a, b}] = fowl::Degree(random_unit(rng));
  }
  for (const char* name : {"T0", "T1"}) {
    interp.bound_concrete_roles.insert(name);
    for (const auto& a : interp.domain)
      for (const auto& v : interp.values)
        if (keep(rng)) interp.concrete_role_table[{name, a, v}] = fowl::Degree(random_unit(rng));
  }
  interp.individual_map["i0"] = interp.domain[0];
  interp.individual_map["i1"] = interp.domain[interp.domain.size() - 1];
  return interp;
}

inline fowl::RoleExpr random_role(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: return fowl::RoleExpr::atomic("R0");
    case 1: return fowl::RoleExpr::atomic("R1");
    case 2: return fowl::RoleExpr::inverse(fowl::RoleExpr::atomic("R0"));
    default: return fowl::RoleExpr::universal();
  }
}

inline fowl::DatatypeExpr random_datatype(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: return fowl::DatatypeExpr::named("Low");
    case 1: return fowl::DatatypeExpr::named("Mid");
    case 2: return fowl::DatatypeExpr::modified("very", fowl::DatatypeExpr::named("Low"));
    default: return fowl::DatatypeExpr::top();
  }
}

// Random concept of the given depth over the property_kb vocabulary.
inline fowl::ConceptPtr random_concept(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> leaf_pick(0, 5);
  if (depth <= 0) {
    switch (leaf_pick(rng)) {
      case 0: return fowl::make_atomic("A0");
      case 1: return fowl::make_atomic("A1");
      case 2: return fowl::make_atomic("A2");
      case 3: return fowl::make_top();
      case 4: return fowl::make_bottom();
      default: {
        fowl::Rat v = random_unit(rng);
        if (v == 0) v = 1;
        return fowl::make_nominal(fowl::Degree(v), "i0");
      }
    }
  }
  std::uniform_int_distribution<int> pick(0, 13);
  std::uniform_int_distribution<unsigned> small_card(1, 2);
  switch (pick(rng)) {
    case 0: return fowl::make_and({random_concept(rng, depth - 1), random_concept(rng, depth - 1)});
    case 1: return fowl::make_or({random_concept(rng, depth - 1), random_concept(rng, depth - 1)});
    case 2: return fowl::make_not(random_concept(rng, depth - 1));
    case 3: return fowl::make_all(random_role(rng), random_concept(rng, depth - 1));
    case 4: return fowl::make_some(random_role(rng), random_concept(rng, depth - 1));
    case 5: return fowl::make_data_all("T0", random_datatype(rng));
    case 6: return fowl::make_data_some("T0", random_datatype(rng));
    case 7: return fowl::make_min_card(small_card(rng), random_role(rng), random_concept(rng, depth - 1));
    case 8: return fowl::make_max_card(small_card(rng) - 1, random_role(rng), random_concept(rng, depth - 1));
    case 9: return fowl::make_data_min_card(small_card(rng), "T0", random_datatype(rng));
    case 10: return fowl::make_data_max_card(small_card(rng) - 1, "T0", random_datatype(rng));
    case 11: return fowl::make_has_self(fowl::RoleExpr::atomic("R0"));
    case 12: return fowl::make_modified(pick(rng) % 2 == 0 ? "very" : "roughly", random_concept(rng, depth - 1));
    default:
      return fowl::make_weighted_sum({{rat("0.3"), random_concept(rng, depth - 1)},
                                      {rat("0.5"), random_concept(rng, depth - 1)}});
  }
}

}  // namespace testutil
