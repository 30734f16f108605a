#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fowl/rational.hpp"

namespace fowl::owl {

struct SourceLoc {
  int line = 0, col = 0;
  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

// Object property expression. Inverse applies to a named property only.
struct ObjectProperty {
  enum class Kind { Named, Inverse, Top, Bottom };
  Kind kind = Kind::Named;
  std::string name;
  bool operator==(const ObjectProperty&) const = default;
};

struct DataProperty {
  enum class Kind { Named, Top, Bottom };
  Kind kind = Kind::Named;
  std::string name;
  bool operator==(const DataProperty&) const = default;
};

// A data range in a class expression: a (defined) datatype name or an
// xsd: builtin, which downstream treats as the whole value space.
struct DataRange {
  enum class Kind { Named, Builtin };
  Kind kind = Kind::Named;
  std::string name;
  bool operator==(const DataRange&) const = default;
};

struct ClassExpr;
using ClassExprPtr = std::shared_ptr<const ClassExpr>;

struct ClassExpr {
  enum class Kind {
    Named,
    Thing,
    Nothing,
    IntersectionOf,
    UnionOf,
    ComplementOf,
    AllValuesFrom,
    SomeValuesFrom,
    HasValue,
    DataAllValuesFrom,
    DataSomeValuesFrom,
    DataHasValue,
    OneOf,
    MinCardinality,
    MaxCardinality,
    ExactCardinality,
    DataMinCardinality,
    DataMaxCardinality,
    DataExactCardinality,
    HasSelf,
  };
  Kind kind = Kind::Named;
  std::string name;                       // Named
  std::vector<ClassExprPtr> operands;     // boolean ops; qualifier of restrictions at [0]
  ObjectProperty obj_prop;                // object restrictions
  DataProperty data_prop;                 // data restrictions
  DataRange data_range;                   // data restrictions
  std::vector<std::string> individuals;   // OneOf, HasValue target
  Rat literal;                            // DataHasValue
  unsigned cardinality = 0;
  bool qualified = false;                 // cardinality carries an explicit filler
};

ClassExprPtr make_named_class(std::string name);

enum class AxiomKind {
  ClassAssertion,
  ObjectPropertyAssertion,
  NegativeObjectPropertyAssertion,
  DataPropertyAssertion,
  NegativeDataPropertyAssertion,
  SameIndividual,
  DifferentIndividuals,
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  DisjointUnion,
  SubObjectPropertyOf,
  SubDataPropertyOf,
  EquivalentObjectProperties,
  EquivalentDataProperties,
  ObjectPropertyDomain,
  ObjectPropertyRange,
  DataPropertyDomain,
  DataPropertyRange,
  InverseObjectProperties,
  FunctionalObjectProperty,
  InverseFunctionalObjectProperty,
  TransitiveObjectProperty,
  DisjointObjectProperties,
  DisjointDataProperties,
  ReflexiveObjectProperty,
  IrreflexiveObjectProperty,
  SymmetricObjectProperty,
  AsymmetricObjectProperty,
  FunctionalDataProperty,
};

std::string_view axiom_kind_name(AxiomKind k);

using AnnotationPair = std::pair<std::string, std::string>;  // (property, literal)

struct Axiom {
  AxiomKind kind = AxiomKind::ClassAssertion;
  SourceLoc loc;
  std::vector<ClassExprPtr> classes;
  std::vector<ObjectProperty> object_properties;  // SubObjectPropertyOf: chain..., super last
  std::vector<DataProperty> data_properties;      // SubDataPropertyOf: sub, super
  std::vector<std::string> individuals;
  std::optional<Rat> literal;  // data assertions
  DataRange data_range;        // DataPropertyRange
  bool has_chain = false;      // SubObjectPropertyOf written with a property chain
  // ClassAssertion written with two bare names; order resolved against the
  // declaration table when mapping to DL form.
  bool maybe_swapped = false;

  std::vector<std::string> fuzzy_labels;        // raw fuzzyLabel payload strings
  std::vector<AnnotationPair> other_annotations;  // preserved verbatim
};

struct Declaration {
  std::string name;
  SourceLoc loc;
  std::vector<std::string> fuzzy_labels;
  std::vector<AnnotationPair> other_annotations;
};

struct DatatypeDefinition {
  std::string name;
  std::string base_type;  // e.g. "xsd:integer", "xsd:double"
  std::optional<Rat> min_inclusive, max_inclusive;
  std::vector<std::string> unsupported_facets;
  SourceLoc loc;
  std::vector<std::string> fuzzy_labels;
  std::vector<AnnotationPair> other_annotations;
};

struct OwlDocument {
  std::string ontology_name;
  std::vector<std::string> ontology_fuzzy_labels;
  std::vector<AnnotationPair> ontology_other_annotations;

  std::vector<Declaration> classes;
  std::vector<Declaration> object_properties;
  std::vector<Declaration> data_properties;
  std::vector<Declaration> individuals;
  std::vector<Declaration> datatypes;
  std::vector<DatatypeDefinition> datatype_definitions;
  std::vector<Axiom> axioms;

  bool declares_class(std::string_view name) const;
  bool declares_object_property(std::string_view name) const;
  bool declares_data_property(std::string_view name) const;
  bool declares_individual(std::string_view name) const;
  bool declares_datatype(std::string_view name) const;
  const DatatypeDefinition* find_datatype_definition(std::string_view name) const;
};

// Copy of the document with every fuzzyLabel annotation removed; other
// annotations and all axioms are untouched.
OwlDocument strip_fuzzy_annotations(const OwlDocument& doc);

}  // namespace fowl::owl
