#pragma once

#include <string>
#include <string_view>

#include "fowl/diagnostics.hpp"
#include "fowl/owl_ast.hpp"

namespace fowl::owl {

struct ParseResult {
  OwlDocument document;  // partial when diagnostics contain errors
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

// Parses a functional-style ontology document (see docs/owl-subset.md).
// Accepts both an Ontology(...) wrapper and a bare statement sequence;
// Annotation(fuzzyLabel "...") items may appear at any argument position
// of an axiom or declaration. Errors carry line:col locations and the
// parser recovers at statement boundaries.
ParseResult parse_document(std::string_view text);

// Canonical pretty-printer; parse_document(print_document(d)) reproduces d.
std::string print_document(const OwlDocument& doc);

std::string print_class_expr(const ClassExpr& e);
std::string print_axiom(const Axiom& ax);

}  // namespace fowl::owl
