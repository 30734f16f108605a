#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fowl/diagnostics.hpp"
#include "fowl/fuzzy_logic.hpp"
#include "fowl/membership.hpp"
#include "fowl/modifier.hpp"
#include "fowl/rational.hpp"

namespace fowl {

// Structured form of the fuzzyLabel XML payloads. Payloads mirror the
// annotation surface exactly; range/ordering policy lives in
// validate_local, cross-references in the KB builder.

enum class FuzzyType { Modifier, Datatype, Concept, Role, Axiom, Ontology };

std::string_view fuzzy_type_name(FuzzyType t);

struct ModifierPayload {
  ModifierKind kind = ModifierKind::Linear;
  std::optional<Rat> a, b;  // triangular only
  Rat c;
  bool operator==(const ModifierPayload&) const = default;
};

enum class DatatypePayloadKind { LeftShoulder, RightShoulder, Triangular, Trapezoidal, Modified };

struct DatatypePayload {
  DatatypePayloadKind kind = DatatypePayloadKind::LeftShoulder;
  std::optional<Rat> a, b, c, d;
  std::string modifier, base;  // Modified only
  bool operator==(const DatatypePayload&) const = default;

  // Breakpoints in use, in order (empty for Modified).
  std::vector<Rat> breakpoints() const;
};

enum class ConceptPayloadKind { Modified, Weighted, WeightedSum, Nominal };

struct WeightedPair {
  Rat value;
  std::string base;
  bool operator==(const WeightedPair&) const = default;
};

struct ConceptPayload {
  ConceptPayloadKind kind = ConceptPayloadKind::Modified;
  std::string modifier;               // Modified
  std::string base;                   // Modified, Weighted
  std::optional<Rat> value;           // Weighted, Nominal
  std::string individual;             // Nominal
  std::vector<WeightedPair> summands;  // WeightedSum
  bool operator==(const ConceptPayload&) const = default;
};

struct RolePayload {
  std::string modifier, base;  // kind is always "modified"
  bool operator==(const RolePayload&) const = default;
};

struct AxiomPayload {
  Rat degree = 1;  // absent Degree tag means 1
  bool operator==(const AxiomPayload&) const = default;
};

struct OntologyPayload {
  LogicFamily logic = LogicFamily::Lukasiewicz;  // grammar admits lukasiewicz|zadeh
  bool operator==(const OntologyPayload&) const = default;
};

struct FuzzyAnnotation {
  FuzzyType fuzzy_type = FuzzyType::Axiom;
  std::variant<ModifierPayload, DatatypePayload, ConceptPayload, RolePayload, AxiomPayload, OntologyPayload>
      payload;
  bool operator==(const FuzzyAnnotation&) const = default;
};

struct AnnotationParseResult {
  std::optional<FuzzyAnnotation> annotation;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return annotation.has_value(); }
};

// Parses one fuzzyLabel payload. The root tag is matched case-insensitively,
// attribute and child tag names case-sensitively. Unknown fuzzyType values,
// unknown attributes, missing required attributes and non-numeric values
// are ANNOTATION_PARSE diagnostics; the function never throws on input.
AnnotationParseResult parse_annotation(std::string_view text);

// Canonical single-line emission in the surface syntax of the payload
// listings; parse_annotation(serialize_annotation(a)) == a.
std::string serialize_annotation(const FuzzyAnnotation& a);

// Every violated restriction checkable without cross-references. The two
// modifier iff-clauses are reported at Info severity.
std::vector<Diagnostic> validate_local(const FuzzyAnnotation& a);

// Conversions used after validation. Throw std::invalid_argument when the
// payload violates the target invariants.
ModifierDef modifier_payload_def(const ModifierPayload& p);
// k1/k2 default to the min/max of the breakpoints when not provided.
MembershipShape datatype_payload_shape(const DatatypePayload& p, const std::optional<Rat>& k1,
                                       const std::optional<Rat>& k2);

}  // namespace fowl
