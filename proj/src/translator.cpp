#include "fowl/translator.hpp"

#include <algorithm>
#include <map>

namespace fowl {

std::string_view support_name(Support s) {
  switch (s) {
    case Support::Yes: return "yes";
    case Support::No: return "no";
    case Support::Partial: return "partial";
  }
  return "?";
}

TargetProfile::TargetProfile(std::string name, Support fill) : name_(std::move(name)) { table_.fill(fill); }

namespace {

void set(std::array<Support, 56>& table, ConstructTag tag, Support s) {
  table[static_cast<std::size_t>(tag)] = s;
}

}  // namespace

const TargetProfile& TargetProfile::generic() {
  static const TargetProfile profile("generic", Support::Yes);
  return profile;
}

const TargetProfile& TargetProfile::fuzzydl() {
  static const TargetProfile profile = [] {
    TargetProfile p("fuzzydl", Support::Yes);
    using T = ConstructTag;
    for (T t : {T::C11, T::C12, T::C13, T::C14, T::C15}) set(p.table_, t, Support::No);
    for (T t : {T::R3, T::R4}) set(p.table_, t, Support::No);
    for (T t : {T::A3, T::A6, T::A7, T::A20, T::A21, T::A23, T::A25}) set(p.table_, t, Support::No);
    set(p.table_, T::A12, Support::Partial);  // restricted to the case m = 1
    return p;
  }();
  return profile;
}

const TargetProfile& TargetProfile::delorean() {
  static const TargetProfile profile = [] {
    TargetProfile p("delorean", Support::Yes);
    using T = ConstructTag;
    for (T t : {T::C18, T::C19, T::R4}) set(p.table_, t, Support::No);
    return p;
  }();
  return profile;
}

const TargetProfile* TargetProfile::by_name(std::string_view name) {
  if (name == "generic") return &generic();
  if (name == "fuzzydl") return &fuzzydl();
  if (name == "delorean") return &delorean();
  return nullptr;
}

// ---------------------------------------------------------------------------
// Construct occurrences

namespace {

struct Occurrence {
  ConstructTag tag;
  std::string location;
  bool outside_partial_case = false;
  std::string detail;
};

void collect_concept(const ConceptExpr& root, const std::string& location, std::vector<Occurrence>& out) {
  for_each_concept_node(
      root,
      [&](const ConceptExpr& n) {
        out.push_back({concept_tag(n), location, false, ""});
        switch (n.kind) {
          case ConceptExpr::Kind::DataAll:
          case ConceptExpr::Kind::DataSome:
          case ConceptExpr::Kind::DataMinCard:
          case ConceptExpr::Kind::DataMaxCard:
            out.push_back({ConstructTag::R5, location, false, ""});
            break;
          default: break;
        }
      },
      [&](const RoleExpr& r) { out.push_back({role_tag(r), location, false, ""}); },
      [&](const DatatypeExpr& d) {
        switch (d.kind) {
          case DatatypeExpr::Kind::Shape:
            switch (d.shape.kind) {
              case ShapeKind::LeftShoulder: out.push_back({ConstructTag::D1, location, false, ""}); break;
              case ShapeKind::RightShoulder: out.push_back({ConstructTag::D2, location, false, ""}); break;
              case ShapeKind::Triangular: out.push_back({ConstructTag::D3, location, false, ""}); break;
              case ShapeKind::Trapezoidal: out.push_back({ConstructTag::D4, location, false, ""}); break;
            }
            break;
          case DatatypeExpr::Kind::Modified: out.push_back({ConstructTag::D5, location, false, ""}); break;
          default: break;  // named references count at their definition
        }
      });
}

std::vector<Occurrence> collect_occurrences(const FuzzyKB& kb) {
  std::vector<Occurrence> out;
  for (const auto& name : kb.modifier_order) {
    const ModifierDef& m = kb.modifiers.at(name);
    out.push_back({m.kind == ModifierKind::Linear ? ConstructTag::M1 : ConstructTag::M2, name, false, ""});
  }
  for (const auto& name : kb.datatype_order) {
    const DatatypeExpr& d = kb.datatypes.at(name);
    for_each_datatype_node(d, [&](const DatatypeExpr& n) {
      switch (n.kind) {
        case DatatypeExpr::Kind::Shape:
          switch (n.shape.kind) {
            case ShapeKind::LeftShoulder: out.push_back({ConstructTag::D1, name, false, ""}); break;
            case ShapeKind::RightShoulder: out.push_back({ConstructTag::D2, name, false, ""}); break;
            case ShapeKind::Triangular: out.push_back({ConstructTag::D3, name, false, ""}); break;
            case ShapeKind::Trapezoidal: out.push_back({ConstructTag::D4, name, false, ""}); break;
          }
          break;
        case DatatypeExpr::Kind::Modified: out.push_back({ConstructTag::D5, name, false, ""}); break;
        default: break;
      }
    });
  }
  for (const auto& name : kb.concept_def_order) {
    if (kb.equivalence_derived_defs.count(name)) continue;  // counted via the A9 axiom
    collect_concept(*kb.concept_defs.at(name), name, out);
  }
  for (const auto& name : kb.role_def_order) out.push_back({ConstructTag::R4, name, false, ""});

  for (const FuzzyAxiom* ax : kb.axioms_in_source_order()) {
    Occurrence occ{fuzzy_axiom_tag(ax->kind), ax->loc.str(), false, ""};
    if (ax->kind == FuzzyAxiomKind::RoleInclusion && ax->roles.size() > 2) {
      occ.outside_partial_case = true;
      occ.detail = "restricted to the case m = 1";
    }
    out.push_back(occ);
    for (const auto& c : ax->concepts) collect_concept(*c, ax->loc.str(), out);
    for (const auto& r : ax->roles)
      for_each_role_node(r, [&](const RoleExpr& n) { out.push_back({role_tag(n), ax->loc.str(), false, ""}); });
    for (std::size_t i = 0; i < ax->concrete_roles.size(); ++i)
      out.push_back({ConstructTag::R5, ax->loc.str(), false, ""});
    if (ax->dtype)
      for_each_datatype_node(*ax->dtype, [&](const DatatypeExpr& n) {
        if (n.kind == DatatypeExpr::Kind::Modified) out.push_back({ConstructTag::D5, ax->loc.str(), false, ""});
        if (n.kind == DatatypeExpr::Kind::Shape) out.push_back({ConstructTag::D1, ax->loc.str(), false, ""});
      });
  }
  return out;
}

}  // namespace

std::vector<CapabilityEntry> capability_report(const FuzzyKB& kb, const TargetProfile& t) {
  std::map<ConstructTag, CapabilityEntry> entries;
  for (const Occurrence& occ : collect_occurrences(kb)) {
    CapabilityEntry& e = entries[occ.tag];
    e.tag = occ.tag;
    e.support = t.support(occ.tag);
    ++e.count;
    if (t.support(occ.tag) == Support::Partial && occ.outside_partial_case) ++e.partial_violations;
  }
  std::vector<CapabilityEntry> out;
  out.reserve(entries.size());
  for (auto& [tag, e] : entries) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Dialect emission

namespace {

std::string num(const Rat& r) { return to_decimal_string(r); }

std::string modifier_args(const ModifierDef& m) {
  if (m.kind == ModifierKind::Linear) return "linear " + num(m.c);
  return "triangular " + num(m.a) + " " + num(m.b) + " " + num(m.c);
}

// -- generic -----------------------------------------------------------------

std::string emit_generic(const FuzzyKB& kb) {
  std::string out = "logic " + std::string(family_name(kb.logic)) + "\n";
  for (const auto& name : kb.modifier_order)
    out += "modifier " + name + " " + modifier_args(kb.modifiers.at(name)) + "\n";
  for (const auto& name : kb.datatype_order)
    out += "datatype " + name + " " + print_datatype(kb.datatypes.at(name)) + "\n";
  for (const auto& name : kb.concept_def_order) {
    if (kb.equivalence_derived_defs.count(name)) continue;
    out += "concept " + name + " " + print_concept(*kb.concept_defs.at(name)) + "\n";
  }
  for (const auto& name : kb.role_def_order) {
    const RoleDefinition& d = kb.role_defs.at(name);
    out += "role " + name + " (mod " + d.modifier + " " + d.base + ")\n";
  }
  for (const FuzzyAxiom* ax : kb.axioms_in_source_order()) out += "axiom " + print_fuzzy_axiom(*ax) + "\n";
  return out;
}

// -- fuzzydl-like --------------------------------------------------------------

std::string fdl_degree_suffix(const FuzzyAxiom& ax) {
  if (!ax.degree || *ax.degree == Degree::one()) return "";
  return " " + ax.degree->str();
}

std::string emit_fuzzydl(const FuzzyKB& kb) {
  std::string out = "(define-fuzzy-logic " + std::string(family_name(kb.logic)) + ")\n";
  for (const auto& name : kb.modifier_order)
    out += "(define-modifier " + name + " " + modifier_args(kb.modifiers.at(name)) + ")\n";
  for (const auto& name : kb.datatype_order) {
    const DatatypeExpr& d = kb.datatypes.at(name);
    if (d.kind == DatatypeExpr::Kind::Modified)
      out += "(define-fuzzy-datatype " + name + " modified " + d.name + " " + d.base->name + ")\n";
    else {
      const MembershipShape& s = d.shape;
      out += "(define-fuzzy-datatype " + name + " " + std::string(shape_kind_name(s.kind)) + " " + num(s.k1) +
             " " + num(s.k2) + " " + num(s.a) + " " + num(s.b);
      if (s.kind == ShapeKind::Triangular || s.kind == ShapeKind::Trapezoidal) out += " " + num(s.c);
      if (s.kind == ShapeKind::Trapezoidal) out += " " + num(s.d);
      out += ")\n";
    }
  }
  for (const auto& name : kb.concept_def_order) {
    if (kb.equivalence_derived_defs.count(name)) continue;
    out += "(define-concept " + name + " " + print_concept(*kb.concept_defs.at(name)) + ")\n";
  }
  for (const auto& name : kb.role_def_order) {
    const RoleDefinition& d = kb.role_defs.at(name);
    out += "(define-modified-role " + name + " " + d.modifier + " " + d.base + ")\n";
  }
  for (const FuzzyAxiom* axp : kb.axioms_in_source_order()) {
    const FuzzyAxiom& ax = *axp;
    using K = FuzzyAxiomKind;
    switch (ax.kind) {
      case K::ConceptAssertion:
        out += "(instance " + ax.individuals[0] + " " + print_concept(*ax.concepts[0]) + fdl_degree_suffix(ax) +
               ")\n";
        break;
      case K::RoleAssertion:
        out += "(related " + ax.individuals[0] + " " + ax.individuals[1] + " " + print_role(ax.roles[0]) +
               fdl_degree_suffix(ax) + ")\n";
        break;
      case K::DataRoleAssertion:
        out += "(related-value " + ax.individuals[0] + " " + num(*ax.value) + " " + ax.concrete_roles[0] +
               fdl_degree_suffix(ax) + ")\n";
        break;
      case K::NegatedDataRoleAssertion:
        out += "(not-related-value " + ax.individuals[0] + " " + num(*ax.value) + " " + ax.concrete_roles[0] +
               fdl_degree_suffix(ax) + ")\n";
        break;
      case K::ConceptInclusion:
        out += "(implies " + print_concept(*ax.concepts[0]) + " " + print_concept(*ax.concepts[1]) +
               fdl_degree_suffix(ax) + ")\n";
        break;
      case K::ConceptEquivalence: {
        out += "(equivalent";
        for (const auto& c : ax.concepts) out += " " + print_concept(*c);
        out += ")\n";
        break;
      }
      case K::DisjointConcepts: {
        out += "(disjoint";
        for (const auto& c : ax.concepts) out += " " + print_concept(*c);
        out += ")\n";
        break;
      }
      case K::DisjointUnion: {
        out += "(disjoint-union";
        for (const auto& c : ax.concepts) out += " " + print_concept(*c);
        out += ")\n";
        break;
      }
      case K::RoleInclusion:
        out += "(role-implies " + print_role(ax.roles[0]) + " " + print_role(ax.roles[1]) +
               fdl_degree_suffix(ax) + ")\n";
        break;
      case K::DataRoleInclusion:
        out += "(crole-implies " + ax.concrete_roles[0] + " " + ax.concrete_roles[1] + fdl_degree_suffix(ax) +
               ")\n";
        break;
      case K::RoleEquivalence: {
        out += "(role-equivalent";
        for (const auto& r : ax.roles) out += " " + print_role(r);
        out += ")\n";
        break;
      }
      case K::DataRoleEquivalence: {
        out += "(crole-equivalent";
        for (const auto& t : ax.concrete_roles) out += " " + t;
        out += ")\n";
        break;
      }
      case K::RoleDomain:
        out += "(domain " + (ax.roles.empty() ? ax.concrete_roles[0] : print_role(ax.roles[0])) + " " +
               print_concept(*ax.concepts[0]) + ")\n";
        break;
      case K::RoleRange:
        if (ax.roles.empty())
          out += "(range " + ax.concrete_roles[0] + " " + print_datatype(*ax.dtype) + ")\n";
        else
          out += "(range " + print_role(ax.roles[0]) + " " + print_concept(*ax.concepts[0]) + ")\n";
        break;
      case K::FunctionalRole:
        out += "(functional " + (ax.roles.empty() ? ax.concrete_roles[0] : print_role(ax.roles[0])) + ")\n";
        break;
      case K::TransitiveRole: out += "(transitive " + print_role(ax.roles[0]) + ")\n"; break;
      case K::ReflexiveRole: out += "(reflexive " + print_role(ax.roles[0]) + ")\n"; break;
      case K::SymmetricRole: out += "(symmetric " + print_role(ax.roles[0]) + ")\n"; break;
      case K::NegatedRoleAssertion:
      case K::DifferentIndividuals:
      case K::SameIndividuals:
      case K::DisjointRoles:
      case K::DisjointDataRoles:
      case K::IrreflexiveRole:
      case K::AsymmetricRole:
        // unreachable: gated as unsupported before emission
        break;
    }
  }
  return out;
}

// -- delorean-like --------------------------------------------------------------

std::string kw_role(const RoleExpr& r) {
  switch (r.kind) {
    case RoleExpr::Kind::Atomic: return r.name;
    case RoleExpr::Kind::Inverse: return "inverse(" + kw_role(*r.base) + ")";
    case RoleExpr::Kind::Universal: return "universal";
    case RoleExpr::Kind::Modified: return "modified(" + r.name + ", " + kw_role(*r.base) + ")";
  }
  return "?";
}

std::string kw_datatype(const DatatypeExpr& d) {
  switch (d.kind) {
    case DatatypeExpr::Kind::Shape: {
      const MembershipShape& s = d.shape;
      std::string out = std::string(shape_kind_name(s.kind)) + "(" + num(s.k1) + ", " + num(s.k2) + ", " +
                        num(s.a) + ", " + num(s.b);
      if (s.kind == ShapeKind::Triangular || s.kind == ShapeKind::Trapezoidal) out += ", " + num(s.c);
      if (s.kind == ShapeKind::Trapezoidal) out += ", " + num(s.d);
      return out + ")";
    }
    case DatatypeExpr::Kind::Modified: return "modified(" + d.name + ", " + kw_datatype(*d.base) + ")";
    case DatatypeExpr::Kind::Named: return d.name;
    case DatatypeExpr::Kind::Singleton: return "singleton(" + num(d.value) + ")";
    case DatatypeExpr::Kind::Top: return "anyValue";
  }
  return "?";
}

std::string kw_concept(const ConceptExpr& e) {
  using Kind = ConceptExpr::Kind;
  auto list = [](const std::vector<ConceptPtr>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + kw_concept(*xs[i]);
    return out;
  };
  switch (e.kind) {
    case Kind::Atomic: return e.name;
    case Kind::Top: return "top";
    case Kind::Bottom: return "bottom";
    case Kind::And: return "and(" + list(e.children) + ")";
    case Kind::Or: return "or(" + list(e.children) + ")";
    case Kind::Not: return "not(" + kw_concept(*e.children[0]) + ")";
    case Kind::All: return "all(" + kw_role(e.role) + ", " + kw_concept(*e.children[0]) + ")";
    case Kind::Some: return "some(" + kw_role(e.role) + ", " + kw_concept(*e.children[0]) + ")";
    case Kind::DataAll: return "all(" + e.concrete_role + ", " + kw_datatype(*e.dtype) + ")";
    case Kind::DataSome: return "some(" + e.concrete_role + ", " + kw_datatype(*e.dtype) + ")";
    case Kind::Nominal: return "nominal(" + e.degree.str() + ", " + e.name + ")";
    case Kind::MinCard:
      return "atLeast(" + std::to_string(e.card) + ", " + kw_role(e.role) + ", " + kw_concept(*e.children[0]) +
             ")";
    case Kind::MaxCard:
      return "atMost(" + std::to_string(e.card) + ", " + kw_role(e.role) + ", " + kw_concept(*e.children[0]) +
             ")";
    case Kind::DataMinCard:
      return "atLeast(" + std::to_string(e.card) + ", " + e.concrete_role + ", " + kw_datatype(*e.dtype) + ")";
    case Kind::DataMaxCard:
      return "atMost(" + std::to_string(e.card) + ", " + e.concrete_role + ", " + kw_datatype(*e.dtype) + ")";
    case Kind::HasSelf: return "self(" + kw_role(e.role) + ")";
    case Kind::Modified: return "modified(" + e.name + ", " + kw_concept(*e.children[0]) + ")";
    case Kind::Weighted: return "weighted(" + num(e.weight) + ", " + kw_concept(*e.children[0]) + ")";
    case Kind::WeightedSum: {
      std::string out = "weightedSum(";
      for (std::size_t i = 0; i < e.summands.size(); ++i)
        out += (i ? ", " : "") + std::string("weighted(") + num(e.summands[i].weight) + ", " +
               kw_concept(*e.summands[i].expr) + ")";
      return out + ")";
    }
  }
  return "?";
}

std::string kw_degree_suffix(const FuzzyAxiom& ax) {
  if (!ax.degree || *ax.degree == Degree::one()) return "";
  return ", " + ax.degree->str();
}

std::string emit_delorean(const FuzzyKB& kb) {
  std::string out = "fuzzyLogic(" + std::string(family_name(kb.logic)) + ");\n";
  for (const auto& name : kb.modifier_order) {
    const ModifierDef& m = kb.modifiers.at(name);
    if (m.kind == ModifierKind::Linear)
      out += "modifier(" + name + ", linear(" + num(m.c) + "));\n";
    else
      out += "modifier(" + name + ", triangular(" + num(m.a) + ", " + num(m.b) + ", " + num(m.c) + "));\n";
  }
  for (const auto& name : kb.datatype_order)
    out += "datatype(" + name + ", " + kw_datatype(kb.datatypes.at(name)) + ");\n";
  for (const auto& name : kb.concept_def_order) {
    if (kb.equivalence_derived_defs.count(name)) continue;
    out += "concept(" + name + ", " + kw_concept(*kb.concept_defs.at(name)) + ");\n";
  }
  for (const auto& name : kb.role_def_order) {
    const RoleDefinition& d = kb.role_defs.at(name);
    out += "role(" + name + ", modified(" + d.modifier + ", " + d.base + "));\n";
  }
  for (const FuzzyAxiom* axp : kb.axioms_in_source_order()) {
    const FuzzyAxiom& ax = *axp;
    using K = FuzzyAxiomKind;
    auto join_concepts = [&] {
      std::string s;
      for (std::size_t i = 0; i < ax.concepts.size(); ++i) s += (i ? ", " : "") + kw_concept(*ax.concepts[i]);
      return s;
    };
    switch (ax.kind) {
      case K::ConceptAssertion:
        out += "instance(" + ax.individuals[0] + ", " + kw_concept(*ax.concepts[0]) + kw_degree_suffix(ax) +
               ");\n";
        break;
      case K::RoleAssertion:
        out += "triple(" + ax.individuals[0] + ", " + ax.individuals[1] + ", " + kw_role(ax.roles[0]) +
               kw_degree_suffix(ax) + ");\n";
        break;
      case K::NegatedRoleAssertion:
        out += "negativeTriple(" + ax.individuals[0] + ", " + ax.individuals[1] + ", " + kw_role(ax.roles[0]) +
               kw_degree_suffix(ax) + ");\n";
        break;
      case K::DataRoleAssertion:
        out += "valueTriple(" + ax.individuals[0] + ", " + num(*ax.value) + ", " + ax.concrete_roles[0] +
               kw_degree_suffix(ax) + ");\n";
        break;
      case K::NegatedDataRoleAssertion:
        out += "negativeValueTriple(" + ax.individuals[0] + ", " + num(*ax.value) + ", " + ax.concrete_roles[0] +
               kw_degree_suffix(ax) + ");\n";
        break;
      case K::DifferentIndividuals:
        out += "different(" + ax.individuals[0] + ", " + ax.individuals[1] + ");\n";
        break;
      case K::SameIndividuals: out += "same(" + ax.individuals[0] + ", " + ax.individuals[1] + ");\n"; break;
      case K::ConceptInclusion:
        out += "gci(" + kw_concept(*ax.concepts[0]) + ", " + kw_concept(*ax.concepts[1]) + kw_degree_suffix(ax) +
               ");\n";
        break;
      case K::ConceptEquivalence: out += "equivalent(" + join_concepts() + ");\n"; break;
      case K::DisjointConcepts: out += "disjoint(" + join_concepts() + ");\n"; break;
      case K::DisjointUnion: out += "disjointUnion(" + join_concepts() + ");\n"; break;
      case K::RoleInclusion: {
        std::string chain;
        if (ax.roles.size() > 2) {
          chain = "chain(";
          for (std::size_t i = 0; i + 1 < ax.roles.size(); ++i) chain += (i ? ", " : "") + kw_role(ax.roles[i]);
          chain += ")";
        } else {
          chain = kw_role(ax.roles[0]);
        }
        out += "ria(" + chain + ", " + kw_role(ax.roles.back()) + kw_degree_suffix(ax) + ");\n";
        break;
      }
      case K::DataRoleInclusion:
        out += "dria(" + ax.concrete_roles[0] + ", " + ax.concrete_roles[1] + kw_degree_suffix(ax) + ");\n";
        break;
      case K::RoleEquivalence: {
        out += "roleEquivalent(";
        for (std::size_t i = 0; i < ax.roles.size(); ++i) out += (i ? ", " : "") + kw_role(ax.roles[i]);
        out += ");\n";
        break;
      }
      case K::DataRoleEquivalence: {
        out += "dataRoleEquivalent(";
        for (std::size_t i = 0; i < ax.concrete_roles.size(); ++i) out += (i ? ", " : "") + ax.concrete_roles[i];
        out += ");\n";
        break;
      }
      case K::RoleDomain:
        out += "domain(" + (ax.roles.empty() ? ax.concrete_roles[0] : kw_role(ax.roles[0])) + ", " +
               kw_concept(*ax.concepts[0]) + ");\n";
        break;
      case K::RoleRange:
        if (ax.roles.empty())
          out += "range(" + ax.concrete_roles[0] + ", " + kw_datatype(*ax.dtype) + ");\n";
        else
          out += "range(" + kw_role(ax.roles[0]) + ", " + kw_concept(*ax.concepts[0]) + ");\n";
        break;
      case K::FunctionalRole:
        out += "functional(" + (ax.roles.empty() ? ax.concrete_roles[0] : kw_role(ax.roles[0])) + ");\n";
        break;
      case K::TransitiveRole: out += "transitive(" + kw_role(ax.roles[0]) + ");\n"; break;
      case K::DisjointRoles: {
        out += "disjointRoles(";
        for (std::size_t i = 0; i < ax.roles.size(); ++i) out += (i ? ", " : "") + kw_role(ax.roles[i]);
        out += ");\n";
        break;
      }
      case K::DisjointDataRoles: {
        out += "disjointDataRoles(";
        for (std::size_t i = 0; i < ax.concrete_roles.size(); ++i) out += (i ? ", " : "") + ax.concrete_roles[i];
        out += ");\n";
        break;
      }
      case K::ReflexiveRole: out += "reflexive(" + kw_role(ax.roles[0]) + ");\n"; break;
      case K::IrreflexiveRole: out += "irreflexive(" + kw_role(ax.roles[0]) + ");\n"; break;
      case K::SymmetricRole: out += "symmetric(" + kw_role(ax.roles[0]) + ");\n"; break;
      case K::AsymmetricRole: out += "asymmetric(" + kw_role(ax.roles[0]) + ");\n"; break;
    }
  }
  return out;
}

}  // namespace

TranslateResult translate(const FuzzyKB& kb, const TargetProfile& t) {
  TranslateResult result;
  for (const Occurrence& occ : collect_occurrences(kb)) {
    Support s = t.support(occ.tag);
    if (s == Support::No) {
      result.diagnostics.push_back({diag::kUnsupportedConstruct, Severity::Error, occ.location,
                                    std::string(construct_tag_name(occ.tag)) + " unsupported by " + t.name()});
    } else if (s == Support::Partial && occ.outside_partial_case) {
      result.diagnostics.push_back({diag::kUnsupportedConstruct, Severity::Error, occ.location,
                                    std::string(construct_tag_name(occ.tag)) + " supported by " + t.name() +
                                        " only " + occ.detail});
    }
  }
  if (!result.diagnostics.empty()) return result;

  if (&t == &TargetProfile::generic() || t.name() == "generic")
    result.text = emit_generic(kb);
  else if (t.name() == "fuzzydl")
    result.text = emit_fuzzydl(kb);
  else
    result.text = emit_delorean(kb);
  return result;
}

}  // namespace fowl
