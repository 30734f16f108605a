#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fowl/interpretation.hpp"
#include "fowl/kb.hpp"
#include "fowl/model_parser.hpp"

namespace fowl {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation trace: each node records how its degree combines from its
// children, so a recorded trace can be recomputed and checked.
struct TraceNode {
  enum class Op {
    Leaf,
    Identity,       // definition expansion
    TnormFold,
    TconormFold,
    MinFold,        // inf over children
    MaxFold,        // sup over children
    Negation,
    Implication,    // children[0] => children[1]
    Scale,          // aux * children[0]
    Sum,            // sum of children
    ModifierApply,  // modifier aux_name applied to children[0]
  };
  Op op = Op::Leaf;
  std::string label;
  std::string binding;  // element or concrete value
  Degree degree;
  Rat aux;
  std::string aux_name;
  std::vector<TraceNode> children;
};

Degree recombine_trace(const FuzzyKB& kb, LogicFamily f, const TraceNode& node);
std::string format_trace(const TraceNode& node, int indent = 0);

struct EvalResult {
  Degree degree;
  std::optional<TraceNode> trace;
};

struct AxiomCheck {
  bool holds = false;
  std::optional<Degree> computed;  // left-hand degree for graded kinds
};

struct KbReport {
  struct Entry {
    const FuzzyAxiom* axiom = nullptr;
    bool holds = false;
    std::optional<Degree> computed;
  };
  std::vector<Entry> entries;
  bool satisfied = true;
};

// Evaluates expressions and axioms over one finite interpretation.
// Quantifiers over the abstract domain range over interp.domain; quantifiers
// over the concrete domain range over interp.values. Pure; safe to share.
class Evaluator {
 public:
  Evaluator(const FuzzyKB& kb, const FiniteInterpretation& interp);
  Evaluator(const FuzzyKB& kb, const FiniteInterpretation& interp, LogicFamily family);

  LogicFamily family() const { return family_; }
  const FiniteInterpretation& interpretation() const { return interp_; }

  Degree eval_concept(const ConceptExpr& c, const std::string& element, TraceNode* trace = nullptr) const;
  EvalResult eval_concept_traced(const ConceptExpr& c, const std::string& element) const;

  Degree eval_role(const RoleExpr& r, const std::string& x, const std::string& y) const;
  Degree eval_concrete_role(const std::string& name, const std::string& x, const Rat& v) const;

  // Direct datatype evaluation; enforces the reference interval of shapes
  // (out-of-range values raise std::domain_error).
  Degree eval_datatype(const DatatypeExpr& d, const Rat& v) const;

  AxiomCheck check_axiom(const FuzzyAxiom& ax) const;
  KbReport satisfies_kb() const;

  // Degree of a concept/role assertion in THIS model (the model-relative
  // analogue of the best-degree-bound task).
  Degree bdb_concept(const std::string& individual, const ConceptExpr& c, TraceNode* trace = nullptr) const;
  Degree bdb_role(const std::string& a, const std::string& b, const RoleExpr& r) const;

  const std::string& element_of(const std::string& individual) const;

 private:
  const FuzzyKB& kb_;
  const FiniteInterpretation& interp_;
  LogicFamily family_;

  Degree atomic_concept(const std::string& name, const std::string& x, TraceNode* trace, int depth) const;
  Degree eval(const ConceptExpr& c, const std::string& x, TraceNode* trace, int depth) const;
  Degree eval_datatype_total(const DatatypeExpr& d, const Rat& v, int depth) const;
  Degree resolve_membership(const DatatypeExpr& d, const Rat& v, bool total, int depth) const;
  Degree concept_inclusion_degree(const ConceptExpr& sub, const ConceptExpr& super) const;
  Degree role_composition(const std::vector<RoleExpr>& chain, const std::string& x, const std::string& y) const;
  const ModifierDef& modifier(const std::string& name) const;
};

struct MaximizeResult {
  std::vector<std::pair<std::string, Rat>> best_parameters;  // grid order
  std::string best_element;
  Degree best_degree;
  std::size_t points_evaluated = 0;
};

// Exhaustive enumeration of the grid (first parameter slowest); among ties
// the lexicographically-first assignment wins, and within one grid point the
// first domain element attaining the maximum. Throws EvalError on an empty
// grid.
MaximizeResult maximize_degree(const FuzzyKB& kb, const ModelTemplate& tmpl, const GridSpec& grid,
                               const ConceptExpr& target, LogicFamily family);
MaximizeResult maximize_degree(const FuzzyKB& kb, const ModelTemplate& tmpl, const GridSpec& grid,
                               const ConceptExpr& target);

}  // namespace fowl
