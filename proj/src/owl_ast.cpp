#include "fowl/owl_ast.hpp"

#include <algorithm>

namespace fowl::owl {

ClassExprPtr make_named_class(std::string name) {
  auto e = std::make_shared<ClassExpr>();
  e->kind = ClassExpr::Kind::Named;
  e->name = std::move(name);
  return e;
}

std::string_view axiom_kind_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::ClassAssertion: return "ClassAssertion";
    case AxiomKind::ObjectPropertyAssertion: return "ObjectPropertyAssertion";
    case AxiomKind::NegativeObjectPropertyAssertion: return "NegativeObjectPropertyAssertion";
    case AxiomKind::DataPropertyAssertion: return "DataPropertyAssertion";
    case AxiomKind::NegativeDataPropertyAssertion: return "NegativeDataPropertyAssertion";
    case AxiomKind::SameIndividual: return "SameIndividual";
    case AxiomKind::DifferentIndividuals: return "DifferentIndividuals";
    case AxiomKind::SubClassOf: return "SubClassOf";
    case AxiomKind::EquivalentClasses: return "EquivalentClasses";
    case AxiomKind::DisjointClasses: return "DisjointClasses";
    case AxiomKind::DisjointUnion: return "DisjointUnion";
    case AxiomKind::SubObjectPropertyOf: return "SubObjectPropertyOf";
    case AxiomKind::SubDataPropertyOf: return "SubDataPropertyOf";
    case AxiomKind::EquivalentObjectProperties: return "EquivalentObjectProperties";
    case AxiomKind::EquivalentDataProperties: return "EquivalentDataProperties";
    case AxiomKind::ObjectPropertyDomain: return "ObjectPropertyDomain";
    case AxiomKind::ObjectPropertyRange: return "ObjectPropertyRange";
    case AxiomKind::DataPropertyDomain: return "DataPropertyDomain";
    case AxiomKind::DataPropertyRange: return "DataPropertyRange";
    case AxiomKind::InverseObjectProperties: return "InverseObjectProperties";
    case AxiomKind::FunctionalObjectProperty: return "FunctionalObjectProperty";
    case AxiomKind::InverseFunctionalObjectProperty: return "InverseFunctionalObjectProperty";
    case AxiomKind::TransitiveObjectProperty: return "TransitiveObjectProperty";
    case AxiomKind::DisjointObjectProperties: return "DisjointObjectProperties";
    case AxiomKind::DisjointDataProperties: return "DisjointDataProperties";
    case AxiomKind::ReflexiveObjectProperty: return "ReflexiveObjectProperty";
    case AxiomKind::IrreflexiveObjectProperty: return "IrreflexiveObjectProperty";
    case AxiomKind::SymmetricObjectProperty: return "SymmetricObjectProperty";
    case AxiomKind::AsymmetricObjectProperty: return "AsymmetricObjectProperty";
    case AxiomKind::FunctionalDataProperty: return "FunctionalDataProperty";
  }
  return "?";
}

namespace {
bool contains(const std::vector<Declaration>& ds, std::string_view name) {
  return std::any_of(ds.begin(), ds.end(), [&](const Declaration& d) { return d.name == name; });
}
}  // namespace

bool OwlDocument::declares_class(std::string_view name) const { return contains(classes, name); }
bool OwlDocument::declares_object_property(std::string_view name) const {
  return contains(object_properties, name);
}
bool OwlDocument::declares_data_property(std::string_view name) const { return contains(data_properties, name); }
bool OwlDocument::declares_individual(std::string_view name) const { return contains(individuals, name); }

bool OwlDocument::declares_datatype(std::string_view name) const {
  return contains(datatypes, name) || find_datatype_definition(name) != nullptr;
}

const DatatypeDefinition* OwlDocument::find_datatype_definition(std::string_view name) const {
  for (const auto& d : datatype_definitions)
    if (d.name == name) return &d;
  return nullptr;
}

OwlDocument strip_fuzzy_annotations(const OwlDocument& doc) {
  OwlDocument out = doc;
  out.ontology_fuzzy_labels.clear();
  auto clear_decls = [](std::vector<Declaration>& ds) {
    for (auto& d : ds) d.fuzzy_labels.clear();
  };
  clear_decls(out.classes);
  clear_decls(out.object_properties);
  clear_decls(out.data_properties);
  clear_decls(out.individuals);
  clear_decls(out.datatypes);
  for (auto& d : out.datatype_definitions) d.fuzzy_labels.clear();
  for (auto& ax : out.axioms) ax.fuzzy_labels.clear();
  return out;
}

}  // namespace fowl::owl
