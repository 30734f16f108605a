#include "fowl/kb_builder.hpp"

#include <algorithm>
#include <functional>

#include "fowl/annotation.hpp"

namespace fowl {

// ---------------------------------------------------------------------------
// kb.hpp implementation

ConstructTag fuzzy_axiom_tag(FuzzyAxiomKind k) {
  return static_cast<ConstructTag>(static_cast<int>(ConstructTag::A1) + static_cast<int>(k));
}

std::string_view fuzzy_axiom_tag_name(FuzzyAxiomKind k) { return construct_tag_name(fuzzy_axiom_tag(k)); }

bool axiom_kind_gradable(FuzzyAxiomKind k) {
  switch (k) {
    case FuzzyAxiomKind::ConceptAssertion:
    case FuzzyAxiomKind::RoleAssertion:
    case FuzzyAxiomKind::NegatedRoleAssertion:
    case FuzzyAxiomKind::DataRoleAssertion:
    case FuzzyAxiomKind::NegatedDataRoleAssertion:
    case FuzzyAxiomKind::ConceptInclusion:
    case FuzzyAxiomKind::RoleInclusion:
    case FuzzyAxiomKind::DataRoleInclusion:
      return true;
    default:
      return false;
  }
}

KbBox axiom_box(FuzzyAxiomKind k) {
  if (k <= FuzzyAxiomKind::SameIndividuals) return KbBox::ABox;
  if (k <= FuzzyAxiomKind::DisjointUnion) return KbBox::TBox;
  return KbBox::RBox;
}

std::string print_fuzzy_axiom(const FuzzyAxiom& ax) {
  std::string body;
  auto names = [&](const std::vector<std::string>& xs) {
    for (const auto& x : xs) body += " " + x;
  };
  auto cs = [&](std::size_t from = 0) {
    for (std::size_t i = from; i < ax.concepts.size(); ++i) body += " " + print_concept(*ax.concepts[i]);
  };
  switch (ax.kind) {
    case FuzzyAxiomKind::ConceptAssertion:
      body = "(instance " + ax.individuals[0] + " " + print_concept(*ax.concepts[0]) + ")";
      break;
    case FuzzyAxiomKind::RoleAssertion:
      body = "(related " + ax.individuals[0] + " " + ax.individuals[1] + " " + print_role(ax.roles[0]) + ")";
      break;
    case FuzzyAxiomKind::NegatedRoleAssertion:
      body = "(not-related " + ax.individuals[0] + " " + ax.individuals[1] + " " + print_role(ax.roles[0]) + ")";
      break;
    case FuzzyAxiomKind::DataRoleAssertion:
      body = "(related-value " + ax.individuals[0] + " " + to_decimal_string(*ax.value) + " " +
             ax.concrete_roles[0] + ")";
      break;
    case FuzzyAxiomKind::NegatedDataRoleAssertion:
      body = "(not-related-value " + ax.individuals[0] + " " + to_decimal_string(*ax.value) + " " +
             ax.concrete_roles[0] + ")";
      break;
    case FuzzyAxiomKind::DifferentIndividuals:
      body = "(different";
      names(ax.individuals);
      body += ")";
      break;
    case FuzzyAxiomKind::SameIndividuals:
      body = "(same";
      names(ax.individuals);
      body += ")";
      break;
    case FuzzyAxiomKind::ConceptInclusion:
      body = "(implies " + print_concept(*ax.concepts[0]) + " " + print_concept(*ax.concepts[1]) + ")";
      break;
    case FuzzyAxiomKind::ConceptEquivalence:
      body = "(equivalent";
      cs();
      body += ")";
      break;
    case FuzzyAxiomKind::DisjointConcepts:
      body = "(disjoint";
      cs();
      body += ")";
      break;
    case FuzzyAxiomKind::DisjointUnion:
      body = "(disjoint-union";
      cs();
      body += ")";
      break;
    case FuzzyAxiomKind::RoleInclusion: {
      if (ax.roles.size() == 2) {
        body = "(role-implies " + print_role(ax.roles[0]);
      } else {
        body = "(role-implies (chain";
        for (std::size_t i = 0; i + 1 < ax.roles.size(); ++i) body += " " + print_role(ax.roles[i]);
        body += ")";
      }
      body += " " + print_role(ax.roles.back()) + ")";
      break;
    }
    case FuzzyAxiomKind::DataRoleInclusion:
      body = "(crole-implies " + ax.concrete_roles[0] + " " + ax.concrete_roles[1] + ")";
      break;
    case FuzzyAxiomKind::RoleEquivalence:
      body = "(role-equivalent";
      for (const auto& r : ax.roles) body += " " + print_role(r);
      body += ")";
      break;
    case FuzzyAxiomKind::DataRoleEquivalence:
      body = "(crole-equivalent";
      names(ax.concrete_roles);
      body += ")";
      break;
    case FuzzyAxiomKind::RoleDomain:
      body = "(domain " + (ax.roles.empty() ? ax.concrete_roles[0] : print_role(ax.roles[0])) + " " +
             print_concept(*ax.concepts[0]) + ")";
      break;
    case FuzzyAxiomKind::RoleRange:
      if (ax.roles.empty())
        body = "(range " + ax.concrete_roles[0] + " " + print_datatype(*ax.dtype) + ")";
      else
        body = "(range " + print_role(ax.roles[0]) + " " + print_concept(*ax.concepts[0]) + ")";
      break;
    case FuzzyAxiomKind::FunctionalRole:
      body = "(functional " + (ax.roles.empty() ? ax.concrete_roles[0] : print_role(ax.roles[0])) + ")";
      break;
    case FuzzyAxiomKind::TransitiveRole:
      body = "(transitive " + print_role(ax.roles[0]) + ")";
      break;
    case FuzzyAxiomKind::DisjointRoles:
      body = "(role-disjoint";
      for (const auto& r : ax.roles) body += " " + print_role(r);
      body += ")";
      break;
    case FuzzyAxiomKind::DisjointDataRoles:
      body = "(crole-disjoint";
      names(ax.concrete_roles);
      body += ")";
      break;
    case FuzzyAxiomKind::ReflexiveRole:
      body = "(reflexive " + print_role(ax.roles[0]) + ")";
      break;
    case FuzzyAxiomKind::IrreflexiveRole:
      body = "(irreflexive " + print_role(ax.roles[0]) + ")";
      break;
    case FuzzyAxiomKind::SymmetricRole:
      body = "(symmetric " + print_role(ax.roles[0]) + ")";
      break;
    case FuzzyAxiomKind::AsymmetricRole:
      body = "(asymmetric " + print_role(ax.roles[0]) + ")";
      break;
  }
  std::string out = std::string(fuzzy_axiom_tag_name(ax.kind)) + " " + body;
  if (ax.degree) out += " >= " + ax.degree->str();
  return out;
}

const ModifierDef* FuzzyKB::find_modifier(const std::string& name) const {
  auto it = modifiers.find(name);
  return it == modifiers.end() ? nullptr : &it->second;
}

const DatatypeExpr* FuzzyKB::find_datatype(const std::string& name) const {
  auto it = datatypes.find(name);
  return it == datatypes.end() ? nullptr : &it->second;
}

const ConceptExpr* FuzzyKB::find_concept_def(const std::string& name) const {
  auto it = concept_defs.find(name);
  return it == concept_defs.end() ? nullptr : it->second.get();
}

const RoleDefinition* FuzzyKB::find_role_def(const std::string& name) const {
  auto it = role_defs.find(name);
  return it == role_defs.end() ? nullptr : &it->second;
}

std::vector<const FuzzyAxiom*> FuzzyKB::axioms_in_source_order() const {
  std::vector<const FuzzyAxiom*> out;
  out.reserve(axiom_count());
  for (const auto* box : {&abox, &tbox, &rbox})
    for (const auto& ax : *box) out.push_back(&ax);
  std::sort(out.begin(), out.end(),
            [](const FuzzyAxiom* x, const FuzzyAxiom* y) { return x->source_index < y->source_index; });
  return out;
}

// ---------------------------------------------------------------------------
// OWL -> DL mapping

namespace {

class DlMapper {
 public:
  DlMapper(const owl::OwlDocument& doc, std::vector<Diagnostic>& diags) : doc_(doc), diags_(diags) {}

  std::vector<FuzzyAxiom> map_axiom(const owl::Axiom& ax) {
    loc_ = ax.loc;
    std::vector<FuzzyAxiom> out;
    auto add = [&](FuzzyAxiom fa) {
      fa.loc = ax.loc;
      out.push_back(std::move(fa));
    };
    switch (ax.kind) {
      case owl::AxiomKind::ClassAssertion: {
        // Two bare names may arrive in either order; the declaration table
        // decides which one is the individual.
        std::string cname = ax.classes[0]->kind == owl::ClassExpr::Kind::Named ? ax.classes[0]->name : "";
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::ConceptAssertion;
        if (ax.maybe_swapped && doc_.declares_individual(cname) && !doc_.declares_individual(ax.individuals[0])) {
          fa.concepts.push_back(map_class_name(ax.individuals[0]));
          fa.individuals.push_back(cname);
        } else {
          fa.concepts.push_back(map_class(*ax.classes[0]));
          fa.individuals.push_back(ax.individuals[0]);
        }
        check_individual(fa.individuals[0]);
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::ObjectPropertyAssertion:
      case owl::AxiomKind::NegativeObjectPropertyAssertion: {
        FuzzyAxiom fa;
        fa.kind = ax.kind == owl::AxiomKind::ObjectPropertyAssertion ? FuzzyAxiomKind::RoleAssertion
                                                                     : FuzzyAxiomKind::NegatedRoleAssertion;
        fa.roles.push_back(map_obj_prop(ax.object_properties[0]));
        fa.individuals = ax.individuals;
        for (const auto& i : fa.individuals) check_individual(i);
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::DataPropertyAssertion:
      case owl::AxiomKind::NegativeDataPropertyAssertion: {
        FuzzyAxiom fa;
        fa.kind = ax.kind == owl::AxiomKind::DataPropertyAssertion ? FuzzyAxiomKind::DataRoleAssertion
                                                                   : FuzzyAxiomKind::NegatedDataRoleAssertion;
        fa.concrete_roles.push_back(map_data_prop(ax.data_properties[0]));
        fa.individuals = ax.individuals;
        check_individual(fa.individuals[0]);
        fa.value = ax.literal;
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::SameIndividual:
      case owl::AxiomKind::DifferentIndividuals: {
        for (const auto& i : ax.individuals) check_individual(i);
        for (std::size_t i = 0; i < ax.individuals.size(); ++i)
          for (std::size_t j = i + 1; j < ax.individuals.size(); ++j) {
            FuzzyAxiom fa;
            fa.kind = ax.kind == owl::AxiomKind::SameIndividual ? FuzzyAxiomKind::SameIndividuals
                                                                : FuzzyAxiomKind::DifferentIndividuals;
            fa.individuals = {ax.individuals[i], ax.individuals[j]};
            add(std::move(fa));
          }
        break;
      }
      case owl::AxiomKind::SubClassOf: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::ConceptInclusion;
        fa.concepts.push_back(map_class(*ax.classes[0]));
        fa.concepts.push_back(map_class(*ax.classes[1]));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::EquivalentClasses:
      case owl::AxiomKind::DisjointClasses:
      case owl::AxiomKind::DisjointUnion: {
        FuzzyAxiom fa;
        fa.kind = ax.kind == owl::AxiomKind::EquivalentClasses ? FuzzyAxiomKind::ConceptEquivalence
                  : ax.kind == owl::AxiomKind::DisjointClasses ? FuzzyAxiomKind::DisjointConcepts
                                                               : FuzzyAxiomKind::DisjointUnion;
        for (const auto& c : ax.classes) fa.concepts.push_back(map_class(*c));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::SubObjectPropertyOf: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::RoleInclusion;
        for (const auto& p : ax.object_properties) fa.roles.push_back(map_obj_prop(p));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::SubDataPropertyOf: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::DataRoleInclusion;
        for (const auto& p : ax.data_properties) fa.concrete_roles.push_back(map_data_prop(p));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::EquivalentObjectProperties: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::RoleEquivalence;
        for (const auto& p : ax.object_properties) fa.roles.push_back(map_obj_prop(p));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::EquivalentDataProperties: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::DataRoleEquivalence;
        for (const auto& p : ax.data_properties) fa.concrete_roles.push_back(map_data_prop(p));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::ObjectPropertyDomain:
      case owl::AxiomKind::ObjectPropertyRange: {
        FuzzyAxiom fa;
        fa.kind = ax.kind == owl::AxiomKind::ObjectPropertyDomain ? FuzzyAxiomKind::RoleDomain
                                                                  : FuzzyAxiomKind::RoleRange;
        fa.roles.push_back(map_obj_prop(ax.object_properties[0]));
        fa.concepts.push_back(map_class(*ax.classes[0]));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::DataPropertyDomain: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::RoleDomain;
        fa.concrete_roles.push_back(map_data_prop(ax.data_properties[0]));
        fa.concepts.push_back(map_class(*ax.classes[0]));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::DataPropertyRange: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::RoleRange;
        fa.concrete_roles.push_back(map_data_prop(ax.data_properties[0]));
        fa.dtype = map_data_range(ax.data_range);
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::InverseObjectProperties: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::RoleEquivalence;
        fa.roles.push_back(map_obj_prop(ax.object_properties[0]));
        fa.roles.push_back(RoleExpr::inverse(map_obj_prop(ax.object_properties[1])));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::FunctionalObjectProperty:
      case owl::AxiomKind::InverseFunctionalObjectProperty: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::FunctionalRole;
        RoleExpr r = map_obj_prop(ax.object_properties[0]);
        if (ax.kind == owl::AxiomKind::InverseFunctionalObjectProperty) r = RoleExpr::inverse(std::move(r));
        fa.roles.push_back(std::move(r));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::FunctionalDataProperty: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::FunctionalRole;
        fa.concrete_roles.push_back(map_data_prop(ax.data_properties[0]));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::TransitiveObjectProperty:
      case owl::AxiomKind::ReflexiveObjectProperty:
      case owl::AxiomKind::IrreflexiveObjectProperty:
      case owl::AxiomKind::SymmetricObjectProperty:
      case owl::AxiomKind::AsymmetricObjectProperty: {
        FuzzyAxiom fa;
        fa.kind = ax.kind == owl::AxiomKind::TransitiveObjectProperty   ? FuzzyAxiomKind::TransitiveRole
                  : ax.kind == owl::AxiomKind::ReflexiveObjectProperty  ? FuzzyAxiomKind::ReflexiveRole
                  : ax.kind == owl::AxiomKind::IrreflexiveObjectProperty ? FuzzyAxiomKind::IrreflexiveRole
                  : ax.kind == owl::AxiomKind::SymmetricObjectProperty  ? FuzzyAxiomKind::SymmetricRole
                                                                        : FuzzyAxiomKind::AsymmetricRole;
        fa.roles.push_back(map_obj_prop(ax.object_properties[0]));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::DisjointObjectProperties: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::DisjointRoles;
        for (const auto& p : ax.object_properties) fa.roles.push_back(map_obj_prop(p));
        add(std::move(fa));
        break;
      }
      case owl::AxiomKind::DisjointDataProperties: {
        FuzzyAxiom fa;
        fa.kind = FuzzyAxiomKind::DisjointDataRoles;
        for (const auto& p : ax.data_properties) fa.concrete_roles.push_back(map_data_prop(p));
        add(std::move(fa));
        break;
      }
    }
    return out;
  }

  ConceptPtr map_class(const owl::ClassExpr& e) {
    using K = owl::ClassExpr::Kind;
    switch (e.kind) {
      case K::Named: return map_class_name(e.name);
      case K::Thing: return make_top();
      case K::Nothing: return make_bottom();
      case K::IntersectionOf:
      case K::UnionOf: {
        std::vector<ConceptPtr> children;
        for (const auto& c : e.operands) children.push_back(map_class(*c));
        return e.kind == K::IntersectionOf ? make_and(std::move(children)) : make_or(std::move(children));
      }
      case K::ComplementOf: return make_not(map_class(*e.operands[0]));
      case K::AllValuesFrom: return make_all(map_obj_prop(e.obj_prop), map_class(*e.operands[0]));
      case K::SomeValuesFrom: return make_some(map_obj_prop(e.obj_prop), map_class(*e.operands[0]));
      case K::HasValue: {
        check_individual(e.individuals[0]);
        return make_some(map_obj_prop(e.obj_prop), make_nominal(Degree::one(), e.individuals[0]));
      }
      case K::DataAllValuesFrom: return make_data_all(map_data_prop(e.data_prop), map_data_range(e.data_range));
      case K::DataSomeValuesFrom: return make_data_some(map_data_prop(e.data_prop), map_data_range(e.data_range));
      case K::DataHasValue:
        return make_data_some(map_data_prop(e.data_prop), DatatypeExpr::singleton(e.literal));
      case K::OneOf: {
        std::vector<ConceptPtr> nominals;
        for (const auto& o : e.individuals) {
          check_individual(o);
          nominals.push_back(make_nominal(Degree::one(), o));
        }
        if (nominals.size() == 1) return nominals[0];
        return make_or(std::move(nominals));
      }
      case K::MinCardinality: {
        if (e.cardinality == 0) {
          diags_.push_back({diag::kCardinalityBound, Severity::Warning, loc_.str(),
                            "min cardinality 0 is trivially the top concept"});
          return make_top();
        }
        return make_min_card(e.cardinality, map_obj_prop(e.obj_prop), map_qualifier(e));
      }
      case K::MaxCardinality: return make_max_card(e.cardinality, map_obj_prop(e.obj_prop), map_qualifier(e));
      case K::ExactCardinality: {
        ConceptPtr upper = make_max_card(e.cardinality, map_obj_prop(e.obj_prop), map_qualifier(e));
        if (e.cardinality == 0) return upper;  // the >= 0 conjunct is top
        ConceptPtr lower = make_min_card(e.cardinality, map_obj_prop(e.obj_prop), map_qualifier(e));
        return make_and({std::move(lower), std::move(upper)});
      }
      case K::DataMinCardinality: {
        if (e.cardinality == 0) {
          diags_.push_back({diag::kCardinalityBound, Severity::Warning, loc_.str(),
                            "min cardinality 0 is trivially the top concept"});
          return make_top();
        }
        return make_data_min_card(e.cardinality, map_data_prop(e.data_prop), map_data_qualifier(e));
      }
      case K::DataMaxCardinality:
        return make_data_max_card(e.cardinality, map_data_prop(e.data_prop), map_data_qualifier(e));
      case K::DataExactCardinality: {
        ConceptPtr upper = make_data_max_card(e.cardinality, map_data_prop(e.data_prop), map_data_qualifier(e));
        if (e.cardinality == 0) return upper;
        ConceptPtr lower = make_data_min_card(e.cardinality, map_data_prop(e.data_prop), map_data_qualifier(e));
        return make_and({std::move(lower), std::move(upper)});
      }
      case K::HasSelf: return make_has_self(map_obj_prop(e.obj_prop));
    }
    return make_top();
  }

  RoleExpr map_obj_prop(const owl::ObjectProperty& p) {
    switch (p.kind) {
      case owl::ObjectProperty::Kind::Named:
        if (!doc_.declares_object_property(p.name))
          diags_.push_back({diag::kUndeclaredName, Severity::Error, loc_.str(),
                            "object property '" + p.name + "' is not declared"});
        return RoleExpr::atomic(p.name);
      case owl::ObjectProperty::Kind::Inverse: {
        if (!doc_.declares_object_property(p.name))
          diags_.push_back({diag::kUndeclaredName, Severity::Error, loc_.str(),
                            "object property '" + p.name + "' is not declared"});
        return RoleExpr::inverse(RoleExpr::atomic(p.name));
      }
      case owl::ObjectProperty::Kind::Top: return RoleExpr::universal();
      case owl::ObjectProperty::Kind::Bottom:
        diags_.push_back({diag::kUnsupportedConstruct, Severity::Error, loc_.str(),
                          "BottomObjectProperty has no role form here"});
        return RoleExpr::universal();
    }
    return RoleExpr::universal();
  }

  std::string map_data_prop(const owl::DataProperty& p) {
    if (p.kind != owl::DataProperty::Kind::Named) {
      diags_.push_back({diag::kUnsupportedConstruct, Severity::Error, loc_.str(),
                        std::string(p.kind == owl::DataProperty::Kind::Top ? "TopDataProperty"
                                                                           : "BottomDataProperty") +
                            " is not supported"});
      return "";
    }
    if (!doc_.declares_data_property(p.name))
      diags_.push_back(
          {diag::kUndeclaredName, Severity::Error, loc_.str(), "data property '" + p.name + "' is not declared"});
    return p.name;
  }

  DatatypeExpr map_data_range(const owl::DataRange& r) {
    if (r.kind == owl::DataRange::Kind::Builtin) return DatatypeExpr::top();
    if (!doc_.declares_datatype(r.name))
      diags_.push_back(
          {diag::kUndeclaredName, Severity::Error, loc_.str(), "datatype '" + r.name + "' is not declared"});
    return DatatypeExpr::named(r.name);
  }

 private:
  const owl::OwlDocument& doc_;
  std::vector<Diagnostic>& diags_;
  owl::SourceLoc loc_;

  ConceptPtr map_class_name(const std::string& name) {
    if (!doc_.declares_class(name))
      diags_.push_back({diag::kUndeclaredName, Severity::Error, loc_.str(), "class '" + name + "' is not declared"});
    return make_atomic(name);
  }

  void check_individual(const std::string& name) {
    if (!doc_.declares_individual(name))
      diags_.push_back(
          {diag::kUndeclaredName, Severity::Error, loc_.str(), "individual '" + name + "' is not declared"});
  }

  ConceptPtr map_qualifier(const owl::ClassExpr& e) {
    return e.qualified ? map_class(*e.operands[0]) : make_top();
  }

  DatatypeExpr map_data_qualifier(const owl::ClassExpr& e) {
    return e.qualified ? map_data_range(e.data_range) : DatatypeExpr::top();
  }
};

}  // namespace

DlResult to_dl(const owl::OwlDocument& doc, const owl::Axiom& ax) {
  DlResult result;
  DlMapper mapper(doc, result.diagnostics);
  result.axioms = mapper.map_axiom(ax);
  return result;
}

// ---------------------------------------------------------------------------
// build_kb

namespace {

// At most one fuzzyLabel per element; returns the payload to use, if any.
const std::string* single_label(const std::vector<std::string>& labels, const std::string& location,
                                std::vector<Diagnostic>& diags) {
  if (labels.empty()) return nullptr;
  if (labels.size() > 1)
    diags.push_back({diag::kDuplicateFuzzyLabel, Severity::Error, location,
                     "element carries " + std::to_string(labels.size()) + " fuzzyLabel annotations"});
  return &labels.front();
}

std::optional<FuzzyAnnotation> parse_label(const std::string& text, const std::string& location,
                                           std::vector<Diagnostic>& diags, bool* local_errors = nullptr) {
  AnnotationParseResult parsed = parse_annotation(text);
  for (auto d : parsed.diagnostics) {
    d.location = location;
    diags.push_back(std::move(d));
  }
  if (!parsed.ok()) return std::nullopt;
  bool errors = false;
  for (auto d : validate_local(*parsed.annotation)) {
    d.location = location;
    errors = errors || d.severity == Severity::Error;
    diags.push_back(std::move(d));
  }
  if (local_errors) *local_errors = errors;
  return parsed.annotation;
}

void mismatch(const std::string& location, FuzzyType found, std::string_view expected,
              std::vector<Diagnostic>& diags) {
  diags.push_back({diag::kFuzzyTypeMismatch, Severity::Error, location,
                   std::string("fuzzyType=") + std::string(fuzzy_type_name(found)) + " is not allowed here (expected " +
                       std::string(expected) + ")"});
}

// Atomic concept names referenced by a definition body, in occurrence order.
std::vector<std::string> referenced_concepts(const ConceptExpr& e) {
  std::vector<std::string> out;
  for_each_concept_node(e, [&](const ConceptExpr& n) {
    if (n.kind == ConceptExpr::Kind::Atomic &&
        std::find(out.begin(), out.end(), n.name) == out.end())
      out.push_back(n.name);
  });
  return out;
}

}  // namespace

BuildResult build_kb(const owl::OwlDocument& doc) {
  BuildResult result;
  FuzzyKB& kb = result.kb;
  auto& diags = result.diagnostics;

  for (const auto& d : doc.classes) kb.declared_classes.insert(d.name);
  for (const auto& d : doc.object_properties) kb.declared_object_roles.insert(d.name);
  for (const auto& d : doc.data_properties) kb.declared_data_roles.insert(d.name);
  for (const auto& d : doc.individuals) kb.declared_individuals.insert(d.name);

  // Ontology annotation: selects the logic (default zadeh).
  if (const std::string* label = single_label(doc.ontology_fuzzy_labels, "ontology", diags)) {
    if (auto a = parse_label(*label, "ontology", diags)) {
      if (a->fuzzy_type != FuzzyType::Ontology) {
        mismatch("ontology", a->fuzzy_type, "ontology", diags);
      } else {
        kb.logic = std::get<OntologyPayload>(a->payload).logic;
        kb.logic_explicit = true;
      }
    }
  }

  // Modifier and datatype definitions live on datatype declarations and
  // datatype definition axioms.
  auto handle_datatype_element = [&](const std::string& name, const std::vector<std::string>& labels,
                                     const std::optional<Rat>& k1, const std::optional<Rat>& k2) {
    const std::string* label = single_label(labels, name, diags);
    if (!label) return;
    bool local_errors = false;
    auto a = parse_label(*label, name, diags, &local_errors);
    if (!a) return;
    if (a->fuzzy_type == FuzzyType::Modifier) {
      if (local_errors) return;
      try {
        if (!kb.modifiers.count(name)) {
          kb.modifiers.emplace(name, modifier_payload_def(std::get<ModifierPayload>(a->payload)));
          kb.modifier_order.push_back(name);
        }
      } catch (const std::invalid_argument& e) {
        diags.push_back({diag::kModParamRange, Severity::Error, name, e.what()});
      }
      return;
    }
    if (a->fuzzy_type == FuzzyType::Datatype) {
      if (local_errors) return;
      const auto& p = std::get<DatatypePayload>(a->payload);
      if (p.kind == DatatypePayloadKind::Modified) {
        if (!kb.datatypes.count(name)) {
          kb.datatypes.emplace(name, DatatypeExpr::modified(p.modifier, DatatypeExpr::named(p.base)));
          kb.datatype_order.push_back(name);
        }
        return;
      }
      try {
        MembershipShape shape = datatype_payload_shape(p, k1, k2);
        if (!kb.datatypes.count(name)) {
          kb.datatypes.emplace(name, DatatypeExpr::from_shape(std::move(shape)));
          kb.datatype_order.push_back(name);
        }
      } catch (const std::invalid_argument&) {
        std::string bounds = k1 ? to_decimal_string(*k1) : "(omitted)";
        bounds += " / " + (k2 ? to_decimal_string(*k2) : std::string("(omitted)"));
        diags.push_back({diag::kDtBreakpointOrder, Severity::Error, name,
                         "breakpoints do not satisfy k1 <= a <= b <= c <= d <= k2 (k1/k2: " + bounds + ")"});
      }
      return;
    }
    mismatch(name, a->fuzzy_type, "modifier or datatype", diags);
  };

  for (const auto& d : doc.datatypes) handle_datatype_element(d.name, d.fuzzy_labels, std::nullopt, std::nullopt);
  for (const auto& d : doc.datatype_definitions) {
    for (const auto& facet : d.unsupported_facets)
      diags.push_back({diag::kUnsupportedConstruct, Severity::Error, d.name,
                       "datatype facet '" + facet + "' is outside the supported subset"});
    handle_datatype_element(d.name, d.fuzzy_labels, d.min_inclusive, d.max_inclusive);
  }

  // Concept definitions on class declarations.
  for (const auto& d : doc.classes) {
    const std::string* label = single_label(d.fuzzy_labels, d.name, diags);
    if (!label) continue;
    bool local_errors = false;
    auto a = parse_label(*label, d.name, diags, &local_errors);
    if (!a) continue;
    if (a->fuzzy_type != FuzzyType::Concept) {
      mismatch(d.name, a->fuzzy_type, "concept", diags);
      continue;
    }
    if (local_errors) continue;
    const auto& p = std::get<ConceptPayload>(a->payload);
    ConceptPtr def;
    switch (p.kind) {
      case ConceptPayloadKind::Modified: def = make_modified(p.modifier, make_atomic(p.base)); break;
      case ConceptPayloadKind::Weighted: def = make_weighted(*p.value, make_atomic(p.base)); break;
      case ConceptPayloadKind::Nominal: def = make_nominal(Degree(*p.value), p.individual); break;
      case ConceptPayloadKind::WeightedSum: {
        std::vector<WeightedSummand> summands;
        for (const auto& s : p.summands) summands.push_back({s.value, make_atomic(s.base)});
        def = make_weighted_sum(std::move(summands));
        break;
      }
    }
    if (!kb.concept_defs.count(d.name)) {
      kb.concept_defs.emplace(d.name, std::move(def));
      kb.concept_def_order.push_back(d.name);
    }
  }

  // Modified roles on property declarations. Accepted syntactically,
  // flagged unsupported downstream (R4 is "No" for both reasoners).
  auto handle_role_element = [&](const owl::Declaration& d, bool is_data) {
    const std::string* label = single_label(d.fuzzy_labels, d.name, diags);
    if (!label) return;
    bool local_errors = false;
    auto a = parse_label(*label, d.name, diags, &local_errors);
    if (!a) return;
    if (a->fuzzy_type != FuzzyType::Role) {
      mismatch(d.name, a->fuzzy_type, "role", diags);
      return;
    }
    if (local_errors) return;
    const auto& p = std::get<RolePayload>(a->payload);
    if (!kb.role_defs.count(d.name)) {
      kb.role_defs.emplace(d.name, RoleDefinition{p.modifier, p.base, is_data});
      kb.role_def_order.push_back(d.name);
      diags.push_back({diag::kModifiedRoleUnsupported, Severity::Warning, d.name,
                       "modified role '" + d.name + "' is accepted but unsupported by downstream reasoners"});
    }
  };
  for (const auto& d : doc.object_properties) handle_role_element(d, false);
  for (const auto& d : doc.data_properties) handle_role_element(d, true);

  for (const auto& d : doc.individuals) {
    const std::string* label = single_label(d.fuzzy_labels, d.name, diags);
    if (!label) continue;
    if (auto a = parse_label(*label, d.name, diags))
      mismatch(d.name, a->fuzzy_type, "no fuzzy annotation on individuals", diags);
  }

  // Axioms: degree annotations plus the DL mapping, in source order.
  DlMapper mapper(doc, diags);
  std::size_t source_index = 0;
  for (const auto& ax : doc.axioms) {
    std::string location = ax.loc.str();
    std::optional<Degree> degree;
    if (const std::string* label = single_label(ax.fuzzy_labels, location, diags)) {
      bool local_errors = false;
      if (auto a = parse_label(*label, location, diags, &local_errors)) {
        if (a->fuzzy_type != FuzzyType::Axiom)
          mismatch(location, a->fuzzy_type, "axiom", diags);
        else if (!local_errors)
          degree = Degree(std::get<AxiomPayload>(a->payload).degree);
      }
    }
    for (FuzzyAxiom fa : mapper.map_axiom(ax)) {
      fa.source_index = source_index++;
      if (degree) {
        if (axiom_kind_gradable(fa.kind))
          fa.degree = degree;
        else
          diags.push_back({diag::kDegreeOnUngraded, Severity::Error, location,
                           std::string("degree annotation on ungradable axiom kind ") +
                               std::string(fuzzy_axiom_tag_name(fa.kind))});
      }
      // Definitional equivalence: a binary A9 with a named first argument
      // doubles as a concept definition (unfoldable-TBox reading).
      if (fa.kind == FuzzyAxiomKind::ConceptEquivalence && fa.concepts.size() == 2 &&
          fa.concepts[0]->kind == ConceptExpr::Kind::Atomic && !kb.concept_defs.count(fa.concepts[0]->name)) {
        kb.concept_defs.emplace(fa.concepts[0]->name, fa.concepts[1]);
        kb.concept_def_order.push_back(fa.concepts[0]->name);
        kb.equivalence_derived_defs.insert(fa.concepts[0]->name);
      }
      switch (axiom_box(fa.kind)) {
        case KbBox::ABox: kb.abox.push_back(std::move(fa)); break;
        case KbBox::TBox: kb.tbox.push_back(std::move(fa)); break;
        case KbBox::RBox: kb.rbox.push_back(std::move(fa)); break;
      }
    }
  }

  // Referential restrictions over the collected definitions.
  for (const auto& name : kb.datatype_order) {
    const DatatypeExpr& d = kb.datatypes.at(name);
    if (d.kind != DatatypeExpr::Kind::Modified) continue;
    if (!kb.modifiers.count(d.name))
      diags.push_back({diag::kUndefinedModifier, Severity::Error, name,
                       "modifier '" + d.name + "' is not defined as a fuzzy modifier"});
    if (d.base->kind == DatatypeExpr::Kind::Named && !kb.datatypes.count(d.base->name))
      diags.push_back({diag::kUndefinedBase, Severity::Error, name,
                       "base '" + d.base->name + "' is not defined as a fuzzy datatype"});
  }
  for (const auto& name : kb.concept_def_order) {
    const ConceptExpr& def = *kb.concept_defs.at(name);
    for_each_concept_node(
        def,
        [&](const ConceptExpr& n) {
          if (n.kind == ConceptExpr::Kind::Modified && !kb.modifiers.count(n.name))
            diags.push_back({diag::kUndefinedModifier, Severity::Error, name,
                             "modifier '" + n.name + "' is not defined as a fuzzy modifier"});
          if (n.kind == ConceptExpr::Kind::Nominal && !kb.declared_individuals.count(n.name))
            diags.push_back({diag::kUndeclaredName, Severity::Error, name,
                             "individual '" + n.name + "' is not declared"});
          if (n.kind == ConceptExpr::Kind::Atomic && !kb.declared_classes.count(n.name))
            diags.push_back(
                {diag::kUndefinedBase, Severity::Error, name, "base '" + n.name + "' is not a declared class"});
        },
        nullptr, nullptr);
  }
  for (const auto& name : kb.role_def_order) {
    const RoleDefinition& rd = kb.role_defs.at(name);
    if (!kb.modifiers.count(rd.modifier))
      diags.push_back({diag::kUndefinedModifier, Severity::Error, name,
                       "modifier '" + rd.modifier + "' is not defined as a fuzzy modifier"});
    const auto& pool = rd.base_is_data ? kb.declared_data_roles : kb.declared_object_roles;
    if (!pool.count(rd.base))
      diags.push_back(
          {diag::kUndefinedBase, Severity::Error, name, "base '" + rd.base + "' is not a declared property"});
  }

  // Recursion is not allowed: drop every definition on a cycle.
  auto cycles = definition_cycle_check(kb);
  for (const auto& cycle : cycles) {
    std::string path;
    for (const auto& n : cycle) path += (path.empty() ? "" : " -> ") + n;
    path += " -> " + cycle.front();
    diags.push_back({diag::kDefinitionCycle, Severity::Error, cycle.front(), "definition cycle: " + path});
    for (const auto& n : cycle) {
      auto drop = [&](auto& map, auto& order) {
        if (map.count(n)) {
          map.erase(n);
          order.erase(std::remove(order.begin(), order.end(), n), order.end());
        }
      };
      drop(kb.concept_defs, kb.concept_def_order);
      drop(kb.datatypes, kb.datatype_order);
      drop(kb.role_defs, kb.role_def_order);
    }
  }

  for (auto d : simple_role_check(kb)) diags.push_back(std::move(d));

  return result;
}

// ---------------------------------------------------------------------------
// definition_cycle_check / simple_role_check

std::vector<std::vector<std::string>> definition_cycle_check(const FuzzyKB& kb) {
  std::vector<std::vector<std::string>> cycles;

  auto run = [&](const std::vector<std::string>& order,
                 const std::function<std::vector<std::string>(const std::string&)>& neighbors) {
    std::map<std::string, int> color;  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::string> stack;
    std::function<void(const std::string&)> dfs = [&](const std::string& u) {
      color[u] = 1;
      stack.push_back(u);
      for (const auto& v : neighbors(u)) {
        int c = color.count(v) ? color[v] : 0;
        if (c == 0)
          dfs(v);
        else if (c == 1)
          cycles.emplace_back(std::find(stack.begin(), stack.end(), v), stack.end());
      }
      stack.pop_back();
      color[u] = 2;
    };
    for (const auto& name : order)
      if (!color.count(name) || color[name] == 0) dfs(name);
  };

  run(kb.concept_def_order, [&](const std::string& u) {
    std::vector<std::string> out;
    if (const ConceptExpr* def = kb.find_concept_def(u))
      for (const auto& name : referenced_concepts(*def))
        if (kb.concept_defs.count(name)) out.push_back(name);
    return out;
  });
  run(kb.datatype_order, [&](const std::string& u) {
    std::vector<std::string> out;
    if (const DatatypeExpr* def = kb.find_datatype(u))
      if (def->kind == DatatypeExpr::Kind::Modified && def->base->kind == DatatypeExpr::Kind::Named &&
          kb.datatypes.count(def->base->name))
        out.push_back(def->base->name);
    return out;
  });
  run(kb.role_def_order, [&](const std::string& u) {
    std::vector<std::string> out;
    if (const RoleDefinition* def = kb.find_role_def(u))
      if (kb.role_defs.count(def->base)) out.push_back(def->base);
    return out;
  });
  return cycles;
}

namespace {

// Atomic role underlying a role expression (through inverse/modified).
const std::string* underlying_role_name(const RoleExpr& r) {
  const RoleExpr* cur = &r;
  while (cur->kind == RoleExpr::Kind::Inverse || cur->kind == RoleExpr::Kind::Modified) cur = cur->base.get();
  return cur->kind == RoleExpr::Kind::Atomic ? &cur->name : nullptr;
}

}  // namespace

std::vector<Diagnostic> simple_role_check(const FuzzyKB& kb) {
  std::vector<Diagnostic> out;

  std::set<std::string> non_simple;
  for (const auto& ax : kb.rbox) {
    if (ax.kind != FuzzyAxiomKind::RoleInclusion || ax.roles.size() < 3) continue;  // chain length >= 2
    if (const std::string* super = underlying_role_name(ax.roles.back())) non_simple.insert(*super);
  }
  // Closure: a role subsuming a non-simple role is non-simple; a modified
  // role inherits from its base.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& ax : kb.rbox) {
      if (ax.kind != FuzzyAxiomKind::RoleInclusion || ax.roles.size() != 2) continue;
      const std::string* sub = underlying_role_name(ax.roles[0]);
      const std::string* super = underlying_role_name(ax.roles[1]);
      if (sub && super && non_simple.count(*sub) && !non_simple.count(*super)) {
        non_simple.insert(*super);
        changed = true;
      }
    }
    for (const auto& [name, def] : kb.role_defs) {
      if (non_simple.count(def.base) && !non_simple.count(name)) {
        non_simple.insert(name);
        changed = true;
      }
    }
  }
  if (non_simple.empty()) return out;

  auto is_non_simple = [&](const RoleExpr& r) {
    const std::string* name = underlying_role_name(r);
    if (!name) return false;
    if (non_simple.count(*name)) return true;
    if (const RoleDefinition* def = kb.find_role_def(*name)) return non_simple.count(def->base) > 0;
    return false;
  };

  auto scan_concept = [&](const ConceptExpr& root, const std::string& location) {
    for_each_concept_node(
        root,
        [&](const ConceptExpr& n) {
          using Kind = ConceptExpr::Kind;
          if (n.kind == Kind::MinCard || n.kind == Kind::MaxCard) {
            if (is_non_simple(n.role))
              out.push_back({diag::kNonSimpleRole, Severity::Error, location,
                             "non-simple role " + print_role(n.role) + " in cardinality restriction"});
          } else if (n.kind == Kind::HasSelf) {
            if (is_non_simple(n.role))
              out.push_back({diag::kNonSimpleRole, Severity::Error, location,
                             "non-simple role " + print_role(n.role) + " in Self restriction"});
          }
        },
        nullptr, nullptr);
  };

  for (const auto& name : kb.concept_def_order) scan_concept(*kb.concept_defs.at(name), name);
  for (const FuzzyAxiom* ax : kb.axioms_in_source_order()) {
    for (const auto& c : ax->concepts) scan_concept(*c, ax->loc.str());
    if (ax->kind == FuzzyAxiomKind::DisjointRoles || ax->kind == FuzzyAxiomKind::IrreflexiveRole ||
        ax->kind == FuzzyAxiomKind::AsymmetricRole) {
      const char* what = ax->kind == FuzzyAxiomKind::DisjointRoles      ? "role disjointness"
                         : ax->kind == FuzzyAxiomKind::IrreflexiveRole ? "irreflexivity"
                                                                        : "asymmetry";
      for (const auto& r : ax->roles)
        if (is_non_simple(r))
          out.push_back({diag::kNonSimpleRole, Severity::Error, ax->loc.str(),
                         "non-simple role " + print_role(r) + " in " + what + " axiom"});
    }
  }
  return out;
}

}  // namespace fowl
