#include "fowl/fuzzy_expr.hpp"

namespace fowl {

std::string_view construct_tag_name(ConstructTag t) {
  static const char* names[] = {
      "C1",  "C2",  "C3",  "C4",  "C5",  "C6",  "C7",  "C8",  "C9",  "C10", "C11", "C12", "C13",
      "C14", "C15", "C16", "C17", "C18", "C19", "R1",  "R2",  "R3",  "R4",  "R5",  "D1",  "D2",
      "D3",  "D4",  "D5",  "M1",  "M2",  "A1",  "A2",  "A3",  "A4",  "A5",  "A6",  "A7",  "A8",
      "A9",  "A10", "A11", "A12", "A13", "A14", "A15", "A16", "A17", "A18", "A19", "A20", "A21",
      "A22", "A23", "A24", "A25",
  };
  return names[static_cast<int>(t)];
}

// -- roles --------------------------------------------------------------------

RoleExpr RoleExpr::atomic(std::string name) {
  RoleExpr r;
  r.kind = Kind::Atomic;
  r.name = std::move(name);
  return r;
}

RoleExpr RoleExpr::inverse(RoleExpr base) {
  RoleExpr r;
  r.kind = Kind::Inverse;
  r.base = std::make_shared<RoleExpr>(std::move(base));
  return r;
}

RoleExpr RoleExpr::universal() {
  RoleExpr r;
  r.kind = Kind::Universal;
  return r;
}

RoleExpr RoleExpr::modified(std::string modifier, RoleExpr base) {
  RoleExpr r;
  r.kind = Kind::Modified;
  r.name = std::move(modifier);
  r.base = std::make_shared<RoleExpr>(std::move(base));
  return r;
}

std::string print_role(const RoleExpr& r) {
  switch (r.kind) {
    case RoleExpr::Kind::Atomic: return r.name;
    case RoleExpr::Kind::Inverse: return "(inverse " + print_role(*r.base) + ")";
    case RoleExpr::Kind::Universal: return "*universal*";
    case RoleExpr::Kind::Modified: return "(mod " + r.name + " " + print_role(*r.base) + ")";
  }
  return "?";
}

ConstructTag role_tag(const RoleExpr& r) {
  switch (r.kind) {
    case RoleExpr::Kind::Atomic: return ConstructTag::R1;
    case RoleExpr::Kind::Inverse: return ConstructTag::R2;
    case RoleExpr::Kind::Universal: return ConstructTag::R3;
    case RoleExpr::Kind::Modified: return ConstructTag::R4;
  }
  return ConstructTag::R1;
}

// -- datatypes ------------------------------------------------------------------

DatatypeExpr DatatypeExpr::from_shape(MembershipShape s) {
  DatatypeExpr d;
  d.kind = Kind::Shape;
  d.shape = std::move(s);
  return d;
}

DatatypeExpr DatatypeExpr::modified(std::string modifier, DatatypeExpr base) {
  DatatypeExpr d;
  d.kind = Kind::Modified;
  d.name = std::move(modifier);
  d.base = std::make_shared<DatatypeExpr>(std::move(base));
  return d;
}

DatatypeExpr DatatypeExpr::named(std::string name) {
  DatatypeExpr d;
  d.kind = Kind::Named;
  d.name = std::move(name);
  return d;
}

DatatypeExpr DatatypeExpr::singleton(Rat value) {
  DatatypeExpr d;
  d.kind = Kind::Singleton;
  d.value = std::move(value);
  return d;
}

DatatypeExpr DatatypeExpr::top() {
  DatatypeExpr d;
  d.kind = Kind::Top;
  return d;
}

std::string print_datatype(const DatatypeExpr& d) {
  switch (d.kind) {
    case DatatypeExpr::Kind::Shape: {
      const MembershipShape& s = d.shape;
      std::string out = "(" + std::string(shape_kind_name(s.kind)) + " " + to_decimal_string(s.k1) + " " +
                        to_decimal_string(s.k2) + " " + to_decimal_string(s.a) + " " + to_decimal_string(s.b);
      if (s.kind == ShapeKind::Triangular || s.kind == ShapeKind::Trapezoidal)
        out += " " + to_decimal_string(s.c);
      if (s.kind == ShapeKind::Trapezoidal) out += " " + to_decimal_string(s.d);
      return out + ")";
    }
    case DatatypeExpr::Kind::Modified: return "(mod " + d.name + " " + print_datatype(*d.base) + ")";
    case DatatypeExpr::Kind::Named: return d.name;
    case DatatypeExpr::Kind::Singleton: return "(singleton " + to_decimal_string(d.value) + ")";
    case DatatypeExpr::Kind::Top: return "*top-d*";
  }
  return "?";
}

// -- concepts -------------------------------------------------------------------

namespace {
ConceptPtr node(ConceptExpr e) { return std::make_shared<ConceptExpr>(std::move(e)); }
}  // namespace

ConceptPtr make_atomic(std::string name) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Atomic;
  e.name = std::move(name);
  return node(std::move(e));
}

ConceptPtr make_top() {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Top;
  return node(std::move(e));
}

ConceptPtr make_bottom() {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Bottom;
  return node(std::move(e));
}

ConceptPtr make_and(std::vector<ConceptPtr> children) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::And;
  e.children = std::move(children);
  return node(std::move(e));
}

ConceptPtr make_or(std::vector<ConceptPtr> children) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Or;
  e.children = std::move(children);
  return node(std::move(e));
}

ConceptPtr make_not(ConceptPtr child) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Not;
  e.children.push_back(std::move(child));
  return node(std::move(e));
}

ConceptPtr make_all(RoleExpr role, ConceptPtr filler) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::All;
  e.role = std::move(role);
  e.children.push_back(std::move(filler));
  return node(std::move(e));
}

ConceptPtr make_some(RoleExpr role, ConceptPtr filler) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Some;
  e.role = std::move(role);
  e.children.push_back(std::move(filler));
  return node(std::move(e));
}

ConceptPtr make_data_all(std::string concrete_role, DatatypeExpr dtype) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::DataAll;
  e.concrete_role = std::move(concrete_role);
  e.dtype = std::move(dtype);
  return node(std::move(e));
}

ConceptPtr make_data_some(std::string concrete_role, DatatypeExpr dtype) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::DataSome;
  e.concrete_role = std::move(concrete_role);
  e.dtype = std::move(dtype);
  return node(std::move(e));
}

ConceptPtr make_nominal(Degree degree, std::string individual) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Nominal;
  e.degree = std::move(degree);
  e.name = std::move(individual);
  return node(std::move(e));
}

ConceptPtr make_min_card(unsigned m, RoleExpr role, ConceptPtr filler) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::MinCard;
  e.card = m;
  e.role = std::move(role);
  e.children.push_back(std::move(filler));
  return node(std::move(e));
}

ConceptPtr make_max_card(unsigned n, RoleExpr role, ConceptPtr filler) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::MaxCard;
  e.card = n;
  e.role = std::move(role);
  e.children.push_back(std::move(filler));
  return node(std::move(e));
}

ConceptPtr make_data_min_card(unsigned m, std::string concrete_role, DatatypeExpr dtype) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::DataMinCard;
  e.card = m;
  e.concrete_role = std::move(concrete_role);
  e.dtype = std::move(dtype);
  return node(std::move(e));
}

ConceptPtr make_data_max_card(unsigned n, std::string concrete_role, DatatypeExpr dtype) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::DataMaxCard;
  e.card = n;
  e.concrete_role = std::move(concrete_role);
  e.dtype = std::move(dtype);
  return node(std::move(e));
}

ConceptPtr make_has_self(RoleExpr role) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::HasSelf;
  e.role = std::move(role);
  return node(std::move(e));
}

ConceptPtr make_modified(std::string modifier, ConceptPtr base) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Modified;
  e.name = std::move(modifier);
  e.children.push_back(std::move(base));
  return node(std::move(e));
}

ConceptPtr make_weighted(Rat weight, ConceptPtr base) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::Weighted;
  e.weight = std::move(weight);
  e.children.push_back(std::move(base));
  return node(std::move(e));
}

ConceptPtr make_weighted_sum(std::vector<WeightedSummand> summands) {
  ConceptExpr e;
  e.kind = ConceptExpr::Kind::WeightedSum;
  e.summands = std::move(summands);
  return node(std::move(e));
}

std::string print_concept(const ConceptExpr& e) {
  using Kind = ConceptExpr::Kind;
  auto list = [](const std::vector<ConceptPtr>& xs) {
    std::string out;
    for (const auto& x : xs) out += " " + print_concept(*x);
    return out;
  };
  switch (e.kind) {
    case Kind::Atomic: return e.name;
    case Kind::Top: return "*top*";
    case Kind::Bottom: return "*bottom*";
    case Kind::And: return "(and" + list(e.children) + ")";
    case Kind::Or: return "(or" + list(e.children) + ")";
    case Kind::Not: return "(not " + print_concept(*e.children[0]) + ")";
    case Kind::All: return "(all " + print_role(e.role) + " " + print_concept(*e.children[0]) + ")";
    case Kind::Some: return "(some " + print_role(e.role) + " " + print_concept(*e.children[0]) + ")";
    case Kind::DataAll: return "(all " + e.concrete_role + " " + print_datatype(*e.dtype) + ")";
    case Kind::DataSome: return "(some " + e.concrete_role + " " + print_datatype(*e.dtype) + ")";
    case Kind::Nominal: return "(nominal " + e.degree.str() + " " + e.name + ")";
    case Kind::MinCard:
      return "(at-least " + std::to_string(e.card) + " " + print_role(e.role) + " " +
             print_concept(*e.children[0]) + ")";
    case Kind::MaxCard:
      return "(at-most " + std::to_string(e.card) + " " + print_role(e.role) + " " +
             print_concept(*e.children[0]) + ")";
    case Kind::DataMinCard:
      return "(at-least " + std::to_string(e.card) + " " + e.concrete_role + " " + print_datatype(*e.dtype) +
             ")";
    case Kind::DataMaxCard:
      return "(at-most " + std::to_string(e.card) + " " + e.concrete_role + " " + print_datatype(*e.dtype) + ")";
    case Kind::HasSelf: return "(self " + print_role(e.role) + ")";
    case Kind::Modified: return "(mod " + e.name + " " + print_concept(*e.children[0]) + ")";
    case Kind::Weighted: return "(w " + to_decimal_string(e.weight) + " " + print_concept(*e.children[0]) + ")";
    case Kind::WeightedSum: {
      std::string out = "(wsum";
      for (const auto& s : e.summands)
        out += " (" + to_decimal_string(s.weight) + " " + print_concept(*s.expr) + ")";
      return out + ")";
    }
  }
  return "?";
}

void for_each_role_node(const RoleExpr& root, const std::function<void(const RoleExpr&)>& on_role) {
  if (on_role) on_role(root);
  if (root.base) for_each_role_node(*root.base, on_role);
}

void for_each_datatype_node(const DatatypeExpr& root, const std::function<void(const DatatypeExpr&)>& on_datatype) {
  if (on_datatype) on_datatype(root);
  if (root.base) for_each_datatype_node(*root.base, on_datatype);
}

void for_each_concept_node(const ConceptExpr& root, const std::function<void(const ConceptExpr&)>& on_concept,
                           const std::function<void(const RoleExpr&)>& on_role,
                           const std::function<void(const DatatypeExpr&)>& on_datatype) {
  if (on_concept) on_concept(root);
  using Kind = ConceptExpr::Kind;
  switch (root.kind) {
    case Kind::All:
    case Kind::Some:
    case Kind::MinCard:
    case Kind::MaxCard:
    case Kind::HasSelf:
      for_each_role_node(root.role, on_role);
      break;
    case Kind::DataAll:
    case Kind::DataSome:
    case Kind::DataMinCard:
    case Kind::DataMaxCard:
      if (root.dtype) for_each_datatype_node(*root.dtype, on_datatype);
      break;
    default: break;
  }
  for (const auto& child : root.children) for_each_concept_node(*child, on_concept, on_role, on_datatype);
  for (const auto& s : root.summands) for_each_concept_node(*s.expr, on_concept, on_role, on_datatype);
}

ConstructTag concept_tag(const ConceptExpr& e) {
  using Kind = ConceptExpr::Kind;
  switch (e.kind) {
    case Kind::Atomic: return ConstructTag::C1;
    case Kind::Top: return ConstructTag::C2;
    case Kind::Bottom: return ConstructTag::C3;
    case Kind::And: return ConstructTag::C4;
    case Kind::Or: return ConstructTag::C5;
    case Kind::Not: return ConstructTag::C6;
    case Kind::All: return ConstructTag::C7;
    case Kind::Some: return ConstructTag::C8;
    case Kind::DataAll: return ConstructTag::C9;
    case Kind::DataSome: return ConstructTag::C10;
    case Kind::Nominal: return ConstructTag::C11;
    case Kind::MinCard: return ConstructTag::C12;
    case Kind::MaxCard: return ConstructTag::C13;
    case Kind::DataMinCard: return ConstructTag::C14;
    case Kind::DataMaxCard: return ConstructTag::C15;
    case Kind::HasSelf: return ConstructTag::C16;
    case Kind::Modified: return ConstructTag::C17;
    case Kind::Weighted: return ConstructTag::C18;
    case Kind::WeightedSum: return ConstructTag::C19;
  }
  return ConstructTag::C1;
}

}  // namespace fowl
