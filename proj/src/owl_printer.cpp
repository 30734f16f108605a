#include "fowl/owl_parser.hpp"

namespace fowl::owl {

namespace {

std::string escape_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string print_annotations(const std::vector<std::string>& fuzzy, const std::vector<AnnotationPair>& other) {
  std::string out;
  for (const auto& f : fuzzy) out += "Annotation(fuzzyLabel \"" + escape_literal(f) + "\") ";
  for (const auto& [prop, value] : other) out += "Annotation(" + prop + " \"" + escape_literal(value) + "\") ";
  return out;
}

std::string print_obj_prop(const ObjectProperty& p) {
  switch (p.kind) {
    case ObjectProperty::Kind::Named: return p.name;
    case ObjectProperty::Kind::Inverse: return "ObjectInverseOf(" + p.name + ")";
    case ObjectProperty::Kind::Top: return "TopObjectProperty";
    case ObjectProperty::Kind::Bottom: return "BottomObjectProperty";
  }
  return "?";
}

std::string print_data_prop(const DataProperty& p) {
  switch (p.kind) {
    case DataProperty::Kind::Named: return p.name;
    case DataProperty::Kind::Top: return "TopDataProperty";
    case DataProperty::Kind::Bottom: return "BottomDataProperty";
  }
  return "?";
}

std::string print_data_range(const DataRange& r) { return r.name; }

}  // namespace

std::string print_class_expr(const ClassExpr& e) {
  using Kind = ClassExpr::Kind;
  auto list = [](const std::vector<ClassExprPtr>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + print_class_expr(*xs[i]);
    return out;
  };
  switch (e.kind) {
    case Kind::Named: return e.name;
    case Kind::Thing: return "owl:Thing";
    case Kind::Nothing: return "owl:Nothing";
    case Kind::IntersectionOf: return "ObjectIntersectionOf(" + list(e.operands) + ")";
    case Kind::UnionOf: return "ObjectUnionOf(" + list(e.operands) + ")";
    case Kind::ComplementOf: return "ObjectComplementOf(" + print_class_expr(*e.operands[0]) + ")";
    case Kind::AllValuesFrom:
      return "ObjectAllValuesFrom(" + print_obj_prop(e.obj_prop) + " " + print_class_expr(*e.operands[0]) + ")";
    case Kind::SomeValuesFrom:
      return "ObjectSomeValuesFrom(" + print_obj_prop(e.obj_prop) + " " + print_class_expr(*e.operands[0]) + ")";
    case Kind::HasValue: return "ObjectHasValue(" + print_obj_prop(e.obj_prop) + " " + e.individuals[0] + ")";
    case Kind::DataAllValuesFrom:
      return "DataAllValuesFrom(" + print_data_prop(e.data_prop) + " " + print_data_range(e.data_range) + ")";
    case Kind::DataSomeValuesFrom:
      return "DataSomeValuesFrom(" + print_data_prop(e.data_prop) + " " + print_data_range(e.data_range) + ")";
    case Kind::DataHasValue:
      return "DataHasValue(" + print_data_prop(e.data_prop) + " " + to_decimal_string(e.literal) + ")";
    case Kind::OneOf: {
      std::string out = "ObjectOneOf(";
      for (std::size_t i = 0; i < e.individuals.size(); ++i) out += (i ? " " : "") + e.individuals[i];
      return out + ")";
    }
    case Kind::MinCardinality:
    case Kind::MaxCardinality:
    case Kind::ExactCardinality: {
      std::string head = e.kind == Kind::MinCardinality   ? "ObjectMinCardinality"
                         : e.kind == Kind::MaxCardinality ? "ObjectMaxCardinality"
                                                          : "ObjectExactCardinality";
      std::string out = head + "(" + std::to_string(e.cardinality) + " " + print_obj_prop(e.obj_prop);
      if (e.qualified) out += " " + print_class_expr(*e.operands[0]);
      return out + ")";
    }
    case Kind::DataMinCardinality:
    case Kind::DataMaxCardinality:
    case Kind::DataExactCardinality: {
      std::string head = e.kind == Kind::DataMinCardinality   ? "DataMinCardinality"
                         : e.kind == Kind::DataMaxCardinality ? "DataMaxCardinality"
                                                              : "DataExactCardinality";
      std::string out = head + "(" + std::to_string(e.cardinality) + " " + print_data_prop(e.data_prop);
      if (e.qualified) out += " " + print_data_range(e.data_range);
      return out + ")";
    }
    case Kind::HasSelf: return "ObjectHasSelf(" + print_obj_prop(e.obj_prop) + ")";
  }
  return "?";
}

std::string print_axiom(const Axiom& ax) {
  std::string out = std::string(axiom_kind_name(ax.kind)) + "(";
  out += print_annotations(ax.fuzzy_labels, ax.other_annotations);
  auto classes = [&](std::size_t from = 0) {
    for (std::size_t i = from; i < ax.classes.size(); ++i)
      out += (i > from ? " " : "") + print_class_expr(*ax.classes[i]);
  };
  switch (ax.kind) {
    case AxiomKind::ClassAssertion:
      out += print_class_expr(*ax.classes[0]) + " " + ax.individuals[0];
      break;
    case AxiomKind::ObjectPropertyAssertion:
    case AxiomKind::NegativeObjectPropertyAssertion:
      out += print_obj_prop(ax.object_properties[0]) + " " + ax.individuals[0] + " " + ax.individuals[1];
      break;
    case AxiomKind::DataPropertyAssertion:
    case AxiomKind::NegativeDataPropertyAssertion:
      out += print_data_prop(ax.data_properties[0]) + " " + ax.individuals[0] + " " +
             to_decimal_string(*ax.literal);
      break;
    case AxiomKind::SameIndividual:
    case AxiomKind::DifferentIndividuals:
      for (std::size_t i = 0; i < ax.individuals.size(); ++i) out += (i ? " " : "") + ax.individuals[i];
      break;
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses:
    case AxiomKind::DisjointUnion:
      classes();
      break;
    case AxiomKind::SubObjectPropertyOf: {
      if (ax.has_chain) {
        out += "ObjectPropertyChain(";
        for (std::size_t i = 0; i + 1 < ax.object_properties.size(); ++i)
          out += (i ? " " : "") + print_obj_prop(ax.object_properties[i]);
        out += ") ";
      } else {
        out += print_obj_prop(ax.object_properties[0]) + " ";
      }
      out += print_obj_prop(ax.object_properties.back());
      break;
    }
    case AxiomKind::SubDataPropertyOf:
      out += print_data_prop(ax.data_properties[0]) + " " + print_data_prop(ax.data_properties[1]);
      break;
    case AxiomKind::EquivalentObjectProperties:
    case AxiomKind::DisjointObjectProperties:
      for (std::size_t i = 0; i < ax.object_properties.size(); ++i)
        out += (i ? " " : "") + print_obj_prop(ax.object_properties[i]);
      break;
    case AxiomKind::EquivalentDataProperties:
    case AxiomKind::DisjointDataProperties:
      for (std::size_t i = 0; i < ax.data_properties.size(); ++i)
        out += (i ? " " : "") + print_data_prop(ax.data_properties[i]);
      break;
    case AxiomKind::ObjectPropertyDomain:
    case AxiomKind::ObjectPropertyRange:
      out += print_obj_prop(ax.object_properties[0]) + " " + print_class_expr(*ax.classes[0]);
      break;
    case AxiomKind::DataPropertyDomain:
      out += print_data_prop(ax.data_properties[0]) + " " + print_class_expr(*ax.classes[0]);
      break;
    case AxiomKind::DataPropertyRange:
      out += print_data_prop(ax.data_properties[0]) + " " + print_data_range(ax.data_range);
      break;
    case AxiomKind::InverseObjectProperties:
      out += print_obj_prop(ax.object_properties[0]) + " " + print_obj_prop(ax.object_properties[1]);
      break;
    case AxiomKind::FunctionalObjectProperty:
    case AxiomKind::InverseFunctionalObjectProperty:
    case AxiomKind::TransitiveObjectProperty:
    case AxiomKind::ReflexiveObjectProperty:
    case AxiomKind::IrreflexiveObjectProperty:
    case AxiomKind::SymmetricObjectProperty:
    case AxiomKind::AsymmetricObjectProperty:
      out += print_obj_prop(ax.object_properties[0]);
      break;
    case AxiomKind::FunctionalDataProperty:
      out += print_data_prop(ax.data_properties[0]);
      break;
  }
  return out + ")";
}

std::string print_document(const OwlDocument& doc) {
  std::string out = "Ontology(";
  if (!doc.ontology_name.empty()) out += doc.ontology_name;
  out += "\n";
  for (const auto& f : doc.ontology_fuzzy_labels) out += "Annotation(fuzzyLabel \"" + escape_literal(f) + "\")\n";
  for (const auto& [prop, value] : doc.ontology_other_annotations)
    out += "Annotation(" + prop + " \"" + escape_literal(value) + "\")\n";
  auto decls = [&](const char* head, const std::vector<Declaration>& ds) {
    for (const auto& d : ds)
      out += std::string(head) + "(" + print_annotations(d.fuzzy_labels, d.other_annotations) + d.name + ")\n";
  };
  decls("Class", doc.classes);
  decls("Datatype", doc.datatypes);
  decls("ObjectProperty", doc.object_properties);
  decls("DataProperty", doc.data_properties);
  decls("NamedIndividual", doc.individuals);
  for (const auto& d : doc.datatype_definitions) {
    out += "DatatypeDefinition(" + print_annotations(d.fuzzy_labels, d.other_annotations) + d.name;
    if (d.min_inclusive || d.max_inclusive || !d.unsupported_facets.empty()) {
      out += " DatatypeRestriction(" + (d.base_type.empty() ? std::string("xsd:double") : d.base_type);
      std::string suffix = "^^" + (d.base_type.empty() ? std::string("xsd:double") : d.base_type);
      if (d.min_inclusive) out += " xsd:minInclusive \"" + to_decimal_string(*d.min_inclusive) + "\"" + suffix;
      if (d.max_inclusive) out += " xsd:maxInclusive \"" + to_decimal_string(*d.max_inclusive) + "\"" + suffix;
      out += ")";
    } else if (!d.base_type.empty()) {
      out += " " + d.base_type;
    }
    out += ")\n";
  }
  for (const auto& ax : doc.axioms) out += print_axiom(ax) + "\n";
  return out + ")\n";
}

}  // namespace fowl::owl
