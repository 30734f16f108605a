#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fowl/fuzzy_expr.hpp"
#include "fowl/fuzzy_logic.hpp"
#include "fowl/modifier.hpp"
#include "fowl/owl_ast.hpp"

namespace fowl {

// Axiom kinds A1-A25. Degrees (fixed comparator >=) are carried only by the
// gradable kinds A1-A5, A8, A12, A13.
enum class FuzzyAxiomKind {
  ConceptAssertion,          // A1
  RoleAssertion,             // A2
  NegatedRoleAssertion,      // A3
  DataRoleAssertion,         // A4
  NegatedDataRoleAssertion,  // A5
  DifferentIndividuals,      // A6
  SameIndividuals,           // A7
  ConceptInclusion,          // A8
  ConceptEquivalence,        // A9
  DisjointConcepts,          // A10
  DisjointUnion,             // A11
  RoleInclusion,             // A12 (chain of length m >= 1)
  DataRoleInclusion,         // A13
  RoleEquivalence,           // A14
  DataRoleEquivalence,       // A15
  RoleDomain,                // A16 (object or data property)
  RoleRange,                 // A17
  FunctionalRole,            // A18
  TransitiveRole,            // A19
  DisjointRoles,             // A20
  DisjointDataRoles,         // A21
  ReflexiveRole,             // A22
  IrreflexiveRole,           // A23
  SymmetricRole,             // A24
  AsymmetricRole,            // A25
};

ConstructTag fuzzy_axiom_tag(FuzzyAxiomKind k);   // A1..A25
std::string_view fuzzy_axiom_tag_name(FuzzyAxiomKind k);
bool axiom_kind_gradable(FuzzyAxiomKind k);

enum class KbBox { ABox, TBox, RBox };
KbBox axiom_box(FuzzyAxiomKind k);

struct FuzzyAxiom {
  FuzzyAxiomKind kind = FuzzyAxiomKind::ConceptAssertion;
  std::vector<ConceptPtr> concepts;
  std::vector<RoleExpr> roles;              // A12: chain..., super last
  std::vector<std::string> concrete_roles;  // data property operands
  std::vector<std::string> individuals;
  std::optional<Rat> value;                 // A4/A5 asserted value
  std::optional<DatatypeExpr> dtype;        // A17 over a data property
  std::optional<Degree> degree;             // gradable kinds only
  owl::SourceLoc loc;
  std::size_t source_index = 0;  // position among all DL axioms, for emission order

  Degree effective_degree() const { return degree ? *degree : Degree::one(); }
};

// Axiom text like "A8 (implies C D) >= 0.6", used in reports and goldens.
std::string print_fuzzy_axiom(const FuzzyAxiom& ax);

struct RoleDefinition {
  std::string modifier;
  std::string base;
  bool base_is_data = false;
};

struct FuzzyKB {
  LogicFamily logic = LogicFamily::Zadeh;
  bool logic_explicit = false;

  std::vector<std::string> modifier_order;
  std::map<std::string, ModifierDef> modifiers;
  std::vector<std::string> datatype_order;
  std::map<std::string, DatatypeExpr> datatypes;
  std::vector<std::string> concept_def_order;
  std::map<std::string, ConceptPtr> concept_defs;
  std::vector<std::string> role_def_order;
  std::map<std::string, RoleDefinition> role_defs;

  // Concept definitions injected from definitional equivalence axioms; the
  // A9 axiom carries their content, so emitters skip them.
  std::set<std::string> equivalence_derived_defs;

  std::vector<FuzzyAxiom> abox, tbox, rbox;

  std::set<std::string> declared_classes, declared_object_roles, declared_data_roles, declared_individuals;

  const ModifierDef* find_modifier(const std::string& name) const;
  const DatatypeExpr* find_datatype(const std::string& name) const;
  const ConceptExpr* find_concept_def(const std::string& name) const;
  const RoleDefinition* find_role_def(const std::string& name) const;

  // All axioms in source order.
  std::vector<const FuzzyAxiom*> axioms_in_source_order() const;
  std::size_t axiom_count() const { return abox.size() + tbox.size() + rbox.size(); }
};

}  // namespace fowl
