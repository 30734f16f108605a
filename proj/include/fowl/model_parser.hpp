#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fowl/diagnostics.hpp"
#include "fowl/interpretation.hpp"

namespace fowl {

// Line-oriented model format (docs/model-format.md):
//   # comment
//   domain a b c
//   values 20 22500
//   individual paul=a
//   concept Tall(a)=0.5
//   role isFriendOf(a,b)=0.75
//   crole hasAge(a,20)=1
// Every rational position also accepts a $parameter placeholder; a model
// file without placeholders is a template with no parameters.
class ModelTemplate {
 public:
  // Parameter names in first-appearance order.
  const std::vector<std::string>& parameters() const { return parameters_; }

  // Substitutes parameters and builds the interpretation. Throws
  // std::invalid_argument on a missing parameter value and
  // std::domain_error when a substituted degree leaves [0,1].
  FiniteInterpretation instantiate(const std::map<std::string, Rat>& assignment) const;

 private:
  friend struct ModelTemplateParser;

  struct Slot {  // literal rational or parameter reference
    Rat literal;
    std::string param;  // empty when literal
  };
  struct ConceptEntry { std::string name, element; Slot degree; };
  struct RoleEntry { std::string name, from, to; Slot degree; };
  struct ConcreteRoleEntry { std::string name, element; Slot value; Slot degree; };

  std::vector<std::string> domain_;
  std::vector<Slot> values_;
  std::vector<std::pair<std::string, std::string>> individuals_;
  std::vector<ConceptEntry> concepts_;
  std::vector<RoleEntry> roles_;
  std::vector<ConcreteRoleEntry> concrete_roles_;
  std::vector<std::string> parameters_;
};

struct ModelTemplateResult {
  ModelTemplate model;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

ModelTemplateResult parse_model_template(std::string_view text);

struct ModelParseResult {
  FiniteInterpretation interpretation;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

// Parses a concrete model (a template with no parameters).
ModelParseResult parse_model(std::string_view text);

// Grid format: one `param name=lo:hi:step` or `param name=v1,v2,...` per line.
struct GridSpec {
  struct Param {
    std::string name;
    std::vector<Rat> values;
  };
  std::vector<Param> params;

  std::size_t point_count() const;
  // Assignment for grid point `index`; the first parameter varies slowest.
  std::map<std::string, Rat> assignment(std::size_t index) const;
};

struct GridParseResult {
  GridSpec grid;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

GridParseResult parse_grid(std::string_view text);

}  // namespace fowl
