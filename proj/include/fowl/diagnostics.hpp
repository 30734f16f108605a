#pragma once

#include <string>
#include <vector>

namespace fowl {

enum class Severity { Info, Warning, Error };

std::string_view severity_name(Severity s);

// One finding. `code` is stable and documented in docs/diagnostics.md;
// `location` is a file:line:col or an element name, possibly empty.
struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string location;
  std::string message;

  // CODE \t severity \t location \t message
  std::string tsv() const;
};

bool has_errors(const std::vector<Diagnostic>& ds);
bool has_warnings(const std::vector<Diagnostic>& ds);

// Stable diagnostic codes.
namespace diag {
inline constexpr const char* kAnnotationParse = "ANNOTATION_PARSE";
inline constexpr const char* kModParamRange = "MOD_PARAM_RANGE";
inline constexpr const char* kModBreakpointOrder = "MOD_BREAKPOINT_ORDER";
inline constexpr const char* kModIffAB = "MOD_IFF_AB";
inline constexpr const char* kModIffBC = "MOD_IFF_BC";
inline constexpr const char* kDtBreakpointOrder = "DT_BREAKPOINT_ORDER";
inline constexpr const char* kWeightRange = "WEIGHT_RANGE";
inline constexpr const char* kWsumTooFew = "WSUM_TOO_FEW";
inline constexpr const char* kWsumWeightOverflow = "WSUM_WEIGHT_OVERFLOW";
inline constexpr const char* kNominalDegreeRange = "NOMINAL_DEGREE_RANGE";
inline constexpr const char* kAxiomDegreeRange = "AXIOM_DEGREE_RANGE";
inline constexpr const char* kOwlParse = "OWL_PARSE";
inline constexpr const char* kDuplicateFuzzyLabel = "DUPLICATE_FUZZY_LABEL";
inline constexpr const char* kFuzzyTypeMismatch = "FUZZYTYPE_MISMATCH";
inline constexpr const char* kUndefinedModifier = "UNDEFINED_MODIFIER";
inline constexpr const char* kUndefinedBase = "UNDEFINED_BASE";
inline constexpr const char* kUndeclaredName = "UNDECLARED_NAME";
inline constexpr const char* kDefinitionCycle = "DEFINITION_CYCLE";
inline constexpr const char* kDegreeOnUngraded = "DEGREE_ON_UNGRADED";
inline constexpr const char* kNonSimpleRole = "NON_SIMPLE_ROLE";
inline constexpr const char* kCardinalityBound = "CARDINALITY_BOUND";
inline constexpr const char* kUnsupportedConstruct = "UNSUPPORTED_CONSTRUCT";
inline constexpr const char* kModifiedRoleUnsupported = "MODIFIED_ROLE_UNSUPPORTED";
inline constexpr const char* kModelParse = "MODEL_PARSE";
inline constexpr const char* kGridParse = "GRID_PARSE";
}  // namespace diag

}  // namespace fowl
