#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fowl/degree.hpp"
#include "fowl/rational.hpp"

namespace fowl {

// An explicit finite fuzzy interpretation: the abstract domain, the finite
// slice of the concrete domain that quantifiers range over, individual
// mappings and membership tables. Names bound by the model (even with an
// empty table) are distinguishable from unbound names; sparse table entries
// default to 0.
struct FiniteInterpretation {
  std::vector<std::string> domain;  // listed order
  std::vector<Rat> values;          // listed order, duplicates removed

  std::map<std::string, std::string> individual_map;  // individual -> element

  std::set<std::string> bound_concepts, bound_roles, bound_concrete_roles;

  std::map<std::pair<std::string, std::string>, Degree> concept_table;
  std::map<std::tuple<std::string, std::string, std::string>, Degree> role_table;
  std::map<std::tuple<std::string, std::string, Rat>, Degree> concrete_role_table;

  bool has_element(const std::string& e) const;

  Degree concept_degree(const std::string& name, const std::string& x) const;
  Degree role_degree(const std::string& name, const std::string& x, const std::string& y) const;
  Degree concrete_role_degree(const std::string& name, const std::string& x, const Rat& v) const;
};

}  // namespace fowl
