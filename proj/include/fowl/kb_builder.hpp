#pragma once

#include <vector>

#include "fowl/diagnostics.hpp"
#include "fowl/kb.hpp"
#include "fowl/owl_ast.hpp"

namespace fowl {

struct BuildResult {
  FuzzyKB kb;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

// Resolves an annotated OWL document into a fuzzy knowledge base:
// annotation-derived definitions, axiom degrees, logic selection, DL
// mapping of every axiom, and all cross-reference restrictions.
// Diagnostics are accumulated, never fail-fast; the returned KB is the
// best-effort resolution and is fully usable iff ok().
BuildResult build_kb(const owl::OwlDocument& doc);

struct DlResult {
  std::vector<FuzzyAxiom> axioms;  // one OWL axiom may expand to several DL forms
  std::vector<Diagnostic> diagnostics;
};

// Maps a single parsed OWL axiom to its DL form(s) per the OWL/DL
// correspondence tables. Needs the document for declaration lookups.
DlResult to_dl(const owl::OwlDocument& doc, const owl::Axiom& ax);

// Every cycle in the name-reference graph over concept/role/datatype
// definitions; empty iff acyclic. Cycles are reported once, as the list of
// names on the cycle in reference order.
std::vector<std::vector<std::string>> definition_cycle_check(const FuzzyKB& kb);

// Non-simple roles (right-hand sides of chain axioms of length >= 2, closed
// under role subsumption) used in cardinalities, Self, dis/irr/asy.
std::vector<Diagnostic> simple_role_check(const FuzzyKB& kb);

}  // namespace fowl
