#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fowl/degree.hpp"
#include "fowl/membership.hpp"
#include "fowl/rational.hpp"

namespace fowl {

// Construct tags used by capability gating and reports.
enum class ConstructTag {
  C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14, C15, C16, C17, C18, C19,
  R1, R2, R3, R4, R5,
  D1, D2, D3, D4, D5,
  M1, M2,
  A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13, A14, A15, A16, A17, A18, A19,
  A20, A21, A22, A23, A24, A25,
};

std::string_view construct_tag_name(ConstructTag t);

// -- Abstract roles (R1-R4) --------------------------------------------------

struct RoleExpr;
using RolePtr = std::shared_ptr<const RoleExpr>;

struct RoleExpr {
  enum class Kind { Atomic, Inverse, Universal, Modified };
  Kind kind = Kind::Atomic;
  std::string name;  // Atomic: role name; Modified: modifier name
  RolePtr base;      // Inverse / Modified

  static RoleExpr atomic(std::string name);
  static RoleExpr inverse(RoleExpr base);
  static RoleExpr universal();
  static RoleExpr modified(std::string modifier, RoleExpr base);
};

std::string print_role(const RoleExpr& r);

// -- Datatype expressions (D1-D5 plus carriers) -------------------------------

struct DatatypeExpr;
using DatatypePtr = std::shared_ptr<const DatatypeExpr>;

struct DatatypeExpr {
  enum class Kind {
    Shape,      // D1-D4
    Modified,   // D5
    Named,      // reference to a defined datatype
    Singleton,  // crisp { v }, carrier for DataHasValue
    Top,        // every value to degree 1, carrier for unqualified data cardinalities
  };
  Kind kind = Kind::Top;
  MembershipShape shape;  // Shape
  std::string name;       // Modified: modifier name; Named: datatype name
  DatatypePtr base;       // Modified
  Rat value;              // Singleton

  static DatatypeExpr from_shape(MembershipShape s);
  static DatatypeExpr modified(std::string modifier, DatatypeExpr base);
  static DatatypeExpr named(std::string name);
  static DatatypeExpr singleton(Rat value);
  static DatatypeExpr top();
};

std::string print_datatype(const DatatypeExpr& d);

// -- Concepts (C1-C19) ---------------------------------------------------------

struct ConceptExpr;
using ConceptPtr = std::shared_ptr<const ConceptExpr>;

struct WeightedSummand {
  Rat weight;
  ConceptPtr expr;
};

struct ConceptExpr {
  enum class Kind {
    Atomic,       // C1
    Top,          // C2
    Bottom,       // C3
    And,          // C4 (n-ary, t-norm fold)
    Or,           // C5
    Not,          // C6
    All,          // C7
    Some,         // C8
    DataAll,      // C9
    DataSome,     // C10
    Nominal,      // C11
    MinCard,      // C12
    MaxCard,      // C13
    DataMinCard,  // C14
    DataMaxCard,  // C15
    HasSelf,      // C16
    Modified,     // C17
    Weighted,     // C18
    WeightedSum,  // C19
  };
  Kind kind = Kind::Top;
  std::string name;                       // Atomic; Modified: modifier; Nominal: individual
  std::vector<ConceptPtr> children;       // And/Or members; [0] of Not/All/Some/cards/Modified/Weighted
  RoleExpr role;                          // All/Some/MinCard/MaxCard/HasSelf
  std::string concrete_role;              // DataAll/DataSome/DataMinCard/DataMaxCard
  std::optional<DatatypeExpr> dtype;      // data constructs
  Degree degree;                          // Nominal
  Rat weight;                             // Weighted
  std::vector<WeightedSummand> summands;  // WeightedSum
  unsigned card = 0;                      // cardinalities
};

ConceptPtr make_atomic(std::string name);
ConceptPtr make_top();
ConceptPtr make_bottom();
ConceptPtr make_and(std::vector<ConceptPtr> children);
ConceptPtr make_or(std::vector<ConceptPtr> children);
ConceptPtr make_not(ConceptPtr child);
ConceptPtr make_all(RoleExpr role, ConceptPtr filler);
ConceptPtr make_some(RoleExpr role, ConceptPtr filler);
ConceptPtr make_data_all(std::string concrete_role, DatatypeExpr dtype);
ConceptPtr make_data_some(std::string concrete_role, DatatypeExpr dtype);
ConceptPtr make_nominal(Degree degree, std::string individual);
ConceptPtr make_min_card(unsigned m, RoleExpr role, ConceptPtr filler);
ConceptPtr make_max_card(unsigned n, RoleExpr role, ConceptPtr filler);
ConceptPtr make_data_min_card(unsigned m, std::string concrete_role, DatatypeExpr dtype);
ConceptPtr make_data_max_card(unsigned n, std::string concrete_role, DatatypeExpr dtype);
ConceptPtr make_has_self(RoleExpr role);
ConceptPtr make_modified(std::string modifier, ConceptPtr base);
ConceptPtr make_weighted(Rat weight, ConceptPtr base);
ConceptPtr make_weighted_sum(std::vector<WeightedSummand> summands);

// Deterministic s-expression form, used by dialects, reports and tests.
std::string print_concept(const ConceptExpr& e);

ConstructTag concept_tag(const ConceptExpr& e);
ConstructTag role_tag(const RoleExpr& r);

// Pre-order traversal over every sub-concept of root (including root).
// Role and datatype sub-expressions are visited through the second and
// third callbacks when given.
void for_each_concept_node(const ConceptExpr& root, const std::function<void(const ConceptExpr&)>& on_concept,
                           const std::function<void(const RoleExpr&)>& on_role = nullptr,
                           const std::function<void(const DatatypeExpr&)>& on_datatype = nullptr);
void for_each_role_node(const RoleExpr& root, const std::function<void(const RoleExpr&)>& on_role);
void for_each_datatype_node(const DatatypeExpr& root, const std::function<void(const DatatypeExpr&)>& on_datatype);

}  // namespace fowl
