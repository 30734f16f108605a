#include "fowl/evaluator.hpp"

#include <algorithm>

#include "fowl/fuzzy_logic.hpp"

namespace fowl {

namespace {

constexpr int kMaxDepth = 512;

// Index tuples of length k over {0..n-1}, with repetition, odometer order.
template <class Fn>
void for_each_tuple(std::size_t n, std::size_t k, Fn&& fn) {
  if (k == 0 || n == 0) return;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0) {
      if (++idx[pos - 1] < n) break;
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
}

bool all_distinct(const std::vector<std::size_t>& idx) {
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] == idx[j]) return false;
  return true;
}

TraceNode* child_of(TraceNode* t) {
  if (!t) return nullptr;
  t->children.emplace_back();
  return &t->children.back();
}

void leaf(TraceNode* t, std::string label, std::string binding, const Degree& d) {
  if (!t) return;
  TraceNode* c = child_of(t);
  c->op = TraceNode::Op::Leaf;
  c->label = std::move(label);
  c->binding = std::move(binding);
  c->degree = d;
}

}  // namespace

Degree recombine_trace(const FuzzyKB& kb, LogicFamily f, const TraceNode& node) {
  std::vector<Degree> kids;
  kids.reserve(node.children.size());
  for (const auto& c : node.children) kids.push_back(recombine_trace(kb, f, c));
  switch (node.op) {
    case TraceNode::Op::Leaf: return node.degree;
    case TraceNode::Op::Identity: return kids.at(0);
    case TraceNode::Op::TnormFold: {
      Degree acc = Degree::one();
      for (const auto& k : kids) acc = tnorm(f, acc, k);
      return acc;
    }
    case TraceNode::Op::TconormFold: {
      Degree acc = Degree::zero();
      for (const auto& k : kids) acc = tconorm(f, acc, k);
      return acc;
    }
    case TraceNode::Op::MinFold: {
      Degree acc = Degree::one();
      for (const auto& k : kids) acc = std::min(acc, k);
      return acc;
    }
    case TraceNode::Op::MaxFold: {
      Degree acc = Degree::zero();
      for (const auto& k : kids) acc = std::max(acc, k);
      return acc;
    }
    case TraceNode::Op::Negation: return negation(f, kids.at(0));
    case TraceNode::Op::Implication: return implication(f, kids.at(0), kids.at(1));
    case TraceNode::Op::Scale: return Degree(node.aux * kids.at(0).value());
    case TraceNode::Op::Sum: {
      Rat sum = 0;
      for (const auto& k : kids) sum += k.value();
      return Degree(sum);
    }
    case TraceNode::Op::ModifierApply: {
      const ModifierDef* m = kb.find_modifier(node.aux_name);
      if (!m) throw EvalError("trace references unknown modifier '" + node.aux_name + "'");
      return apply_modifier(*m, kids.at(0));
    }
  }
  return node.degree;
}

std::string format_trace(const TraceNode& node, int indent) {
  std::string out(static_cast<std::size_t>(indent) * 2, ' ');
  out += node.label;
  if (!node.binding.empty()) out += " @ " + node.binding;
  out += " = " + node.degree.str() + "\n";
  for (const auto& c : node.children) out += format_trace(c, indent + 1);
  return out;
}

Evaluator::Evaluator(const FuzzyKB& kb, const FiniteInterpretation& interp)
    : Evaluator(kb, interp, kb.logic) {}

Evaluator::Evaluator(const FuzzyKB& kb, const FiniteInterpretation& interp, LogicFamily family)
    : kb_(kb), interp_(interp), family_(family) {}

const ModifierDef& Evaluator::modifier(const std::string& name) const {
  const ModifierDef* m = kb_.find_modifier(name);
  if (!m) throw EvalError("unbound modifier '" + name + "'");
  return *m;
}

const std::string& Evaluator::element_of(const std::string& individual) const {
  auto it = interp_.individual_map.find(individual);
  if (it == interp_.individual_map.end())
    throw EvalError("individual '" + individual + "' is not mapped to a domain element");
  return it->second;
}

Degree Evaluator::eval_concept(const ConceptExpr& c, const std::string& element, TraceNode* trace) const {
  if (!interp_.has_element(element)) throw EvalError("element '" + element + "' is not in the domain");
  return eval(c, element, trace, 0);
}

EvalResult Evaluator::eval_concept_traced(const ConceptExpr& c, const std::string& element) const {
  EvalResult result;
  result.trace.emplace();
  result.degree = eval_concept(c, element, &*result.trace);
  return result;
}

Degree Evaluator::atomic_concept(const std::string& name, const std::string& x, TraceNode* trace,
                                 int depth) const {
  if (const ConceptExpr* def = kb_.find_concept_def(name)) {
    if (trace) trace->op = TraceNode::Op::Identity;
    return eval(*def, x, child_of(trace), depth + 1);
  }
  if (interp_.bound_concepts.count(name)) {
    if (trace) trace->op = TraceNode::Op::Leaf;
    return interp_.concept_degree(name, x);
  }
  throw EvalError("unbound atomic concept '" + name + "'");
}

Degree Evaluator::eval_role(const RoleExpr& r, const std::string& x, const std::string& y) const {
  switch (r.kind) {
    case RoleExpr::Kind::Atomic: {
      if (const RoleDefinition* def = kb_.find_role_def(r.name)) {
        if (def->base_is_data) throw EvalError("concrete role '" + r.name + "' used as an abstract role");
        return apply_modifier(modifier(def->modifier), eval_role(RoleExpr::atomic(def->base), x, y));
      }
      if (interp_.bound_roles.count(r.name)) return interp_.role_degree(r.name, x, y);
      throw EvalError("unbound abstract role '" + r.name + "'");
    }
    case RoleExpr::Kind::Inverse: return eval_role(*r.base, y, x);
    case RoleExpr::Kind::Universal: return Degree::one();
    case RoleExpr::Kind::Modified: return apply_modifier(modifier(r.name), eval_role(*r.base, x, y));
  }
  return Degree::zero();
}

Degree Evaluator::eval_concrete_role(const std::string& name, const std::string& x, const Rat& v) const {
  if (const RoleDefinition* def = kb_.find_role_def(name)) {
    if (def->base_is_data)
      return apply_modifier(modifier(def->modifier), eval_concrete_role(def->base, x, v));
    throw EvalError("abstract role '" + name + "' used as a concrete role");
  }
  if (interp_.bound_concrete_roles.count(name)) return interp_.concrete_role_degree(name, x, v);
  throw EvalError("unbound concrete role '" + name + "'");
}

Degree Evaluator::resolve_membership(const DatatypeExpr& d, const Rat& v, bool total, int depth) const {
  if (depth > kMaxDepth) throw EvalError("datatype definition nesting is too deep");
  switch (d.kind) {
    case DatatypeExpr::Kind::Shape: return total ? membership_total(d.shape, v) : membership(d.shape, v);
    case DatatypeExpr::Kind::Modified:
      return apply_modifier(modifier(d.name), resolve_membership(*d.base, v, total, depth + 1));
    case DatatypeExpr::Kind::Named: {
      const DatatypeExpr* def = kb_.find_datatype(d.name);
      if (!def) throw EvalError("unbound datatype '" + d.name + "'");
      return resolve_membership(*def, v, total, depth + 1);
    }
    case DatatypeExpr::Kind::Singleton: return v == d.value ? Degree::one() : Degree::zero();
    case DatatypeExpr::Kind::Top: return Degree::one();
  }
  return Degree::zero();
}

Degree Evaluator::eval_datatype(const DatatypeExpr& d, const Rat& v) const {
  return resolve_membership(d, v, /*total=*/false, 0);
}

Degree Evaluator::eval_datatype_total(const DatatypeExpr& d, const Rat& v, int depth) const {
  return resolve_membership(d, v, /*total=*/true, depth);
}

Degree Evaluator::eval(const ConceptExpr& c, const std::string& x, TraceNode* trace, int depth) const {
  if (depth > kMaxDepth) throw EvalError("concept definition nesting is too deep");
  if (trace) {
    trace->label = print_concept(c);
    trace->binding = x;
  }
  auto set = [&](TraceNode::Op op, const Degree& d) {
    if (trace) {
      trace->op = op;
      trace->degree = d;
    }
    return d;
  };

  using Kind = ConceptExpr::Kind;
  switch (c.kind) {
    case Kind::Atomic: {
      Degree d = atomic_concept(c.name, x, trace, depth);
      if (trace) trace->degree = d;
      return d;
    }
    case Kind::Top: return set(TraceNode::Op::Leaf, Degree::one());
    case Kind::Bottom: return set(TraceNode::Op::Leaf, Degree::zero());
    case Kind::And: {
      Degree acc = Degree::one();
      for (const auto& ch : c.children) acc = tnorm(family_, acc, eval(*ch, x, child_of(trace), depth + 1));
      return set(TraceNode::Op::TnormFold, acc);
    }
    case Kind::Or: {
      Degree acc = Degree::zero();
      for (const auto& ch : c.children) acc = tconorm(family_, acc, eval(*ch, x, child_of(trace), depth + 1));
      return set(TraceNode::Op::TconormFold, acc);
    }
    case Kind::Not:
      return set(TraceNode::Op::Negation, negation(family_, eval(*c.children[0], x, child_of(trace), depth + 1)));
    case Kind::All: {
      Degree acc = Degree::one();
      for (const auto& y : interp_.domain) {
        TraceNode* pair = child_of(trace);
        if (pair) {
          pair->op = TraceNode::Op::Implication;
          pair->label = "implies";
          pair->binding = y;
        }
        Degree r = eval_role(c.role, x, y);
        leaf(pair, print_role(c.role), x + "," + y, r);
        Degree v = implication(family_, r, eval(*c.children[0], y, child_of(pair), depth + 1));
        if (pair) pair->degree = v;
        acc = std::min(acc, v);
      }
      return set(TraceNode::Op::MinFold, acc);
    }
    case Kind::Some: {
      Degree acc = Degree::zero();
      for (const auto& y : interp_.domain) {
        TraceNode* pair = child_of(trace);
        if (pair) {
          pair->op = TraceNode::Op::TnormFold;
          pair->label = "and";
          pair->binding = y;
        }
        Degree r = eval_role(c.role, x, y);
        leaf(pair, print_role(c.role), x + "," + y, r);
        Degree v = tnorm(family_, r, eval(*c.children[0], y, child_of(pair), depth + 1));
        if (pair) pair->degree = v;
        acc = std::max(acc, v);
      }
      return set(TraceNode::Op::MaxFold, acc);
    }
    case Kind::DataAll: {
      Degree acc = Degree::one();
      for (const auto& v : interp_.values) {
        TraceNode* pair = child_of(trace);
        if (pair) {
          pair->op = TraceNode::Op::Implication;
          pair->label = "implies";
          pair->binding = to_decimal_string(v);
        }
        Degree t = eval_concrete_role(c.concrete_role, x, v);
        Degree dv = eval_datatype_total(*c.dtype, v, depth + 1);
        leaf(pair, c.concrete_role, x + "," + to_decimal_string(v), t);
        leaf(pair, print_datatype(*c.dtype), to_decimal_string(v), dv);
        Degree val = implication(family_, t, dv);
        if (pair) pair->degree = val;
        acc = std::min(acc, val);
      }
      return set(TraceNode::Op::MinFold, acc);
    }
    case Kind::DataSome: {
      Degree acc = Degree::zero();
      for (const auto& v : interp_.values) {
        TraceNode* pair = child_of(trace);
        if (pair) {
          pair->op = TraceNode::Op::TnormFold;
          pair->label = "and";
          pair->binding = to_decimal_string(v);
        }
        Degree t = eval_concrete_role(c.concrete_role, x, v);
        Degree dv = eval_datatype_total(*c.dtype, v, depth + 1);
        leaf(pair, c.concrete_role, x + "," + to_decimal_string(v), t);
        leaf(pair, print_datatype(*c.dtype), to_decimal_string(v), dv);
        Degree val = tnorm(family_, t, dv);
        if (pair) pair->degree = val;
        acc = std::max(acc, val);
      }
      return set(TraceNode::Op::MaxFold, acc);
    }
    case Kind::Nominal: {
      Degree d = x == element_of(c.name) ? c.degree : Degree::zero();
      return set(TraceNode::Op::Leaf, d);
    }
    case Kind::MinCard: {
      // sup over m-tuples of distinct elements of min_i { S(x,y_i) (x) C(y_i) }.
      Degree acc = Degree::zero();
      for_each_tuple(interp_.domain.size(), c.card, [&](const std::vector<std::size_t>& idx) {
        Degree value = Degree::zero();
        if (all_distinct(idx)) {
          value = Degree::one();
          for (std::size_t i : idx) {
            const std::string& y = interp_.domain[i];
            Degree v = tnorm(family_, eval_role(c.role, x, y), eval(*c.children[0], y, nullptr, depth + 1));
            value = std::min(value, v);
          }
        }
        if (trace) {
          std::string binding;
          for (std::size_t i : idx) binding += (binding.empty() ? "" : ",") + interp_.domain[i];
          leaf(trace, "tuple", binding, value);
        }
        acc = std::max(acc, value);
      });
      return set(TraceNode::Op::MaxFold, acc);
    }
    case Kind::MaxCard: {
      // inf over (n+1)-tuples of min_i { S(x,y_i) (x) C(y_i) } => some y_j = y_k.
      Degree acc = Degree::one();
      for_each_tuple(interp_.domain.size(), c.card + 1, [&](const std::vector<std::size_t>& idx) {
        Degree value = Degree::one();  // tuples with a repeat satisfy the implication
        if (all_distinct(idx)) {
          Degree lhs = Degree::one();
          for (std::size_t i : idx) {
            const std::string& y = interp_.domain[i];
            Degree v = tnorm(family_, eval_role(c.role, x, y), eval(*c.children[0], y, nullptr, depth + 1));
            lhs = std::min(lhs, v);
          }
          value = implication(family_, lhs, Degree::zero());
        }
        if (trace) {
          std::string binding;
          for (std::size_t i : idx) binding += (binding.empty() ? "" : ",") + interp_.domain[i];
          leaf(trace, "tuple", binding, value);
        }
        acc = std::min(acc, value);
      });
      return set(TraceNode::Op::MinFold, acc);
    }
    case Kind::DataMinCard: {
      Degree acc = Degree::zero();
      for_each_tuple(interp_.values.size(), c.card, [&](const std::vector<std::size_t>& idx) {
        Degree value = Degree::zero();
        if (all_distinct(idx)) {
          value = Degree::one();
          for (std::size_t i : idx) {
            const Rat& v = interp_.values[i];
            Degree t = tnorm(family_, eval_concrete_role(c.concrete_role, x, v),
                             eval_datatype_total(*c.dtype, v, depth + 1));
            value = std::min(value, t);
          }
        }
        if (trace) {
          std::string binding;
          for (std::size_t i : idx) binding += (binding.empty() ? "" : ",") + to_decimal_string(interp_.values[i]);
          leaf(trace, "tuple", binding, value);
        }
        acc = std::max(acc, value);
      });
      return set(TraceNode::Op::MaxFold, acc);
    }
    case Kind::DataMaxCard: {
      Degree acc = Degree::one();
      for_each_tuple(interp_.values.size(), c.card + 1, [&](const std::vector<std::size_t>& idx) {
        Degree value = Degree::one();
        if (all_distinct(idx)) {
          Degree lhs = Degree::one();
          for (std::size_t i : idx) {
            const Rat& v = interp_.values[i];
            Degree t = tnorm(family_, eval_concrete_role(c.concrete_role, x, v),
                             eval_datatype_total(*c.dtype, v, depth + 1));
            lhs = std::min(lhs, t);
          }
          value = implication(family_, lhs, Degree::zero());
        }
        if (trace) {
          std::string binding;
          for (std::size_t i : idx) binding += (binding.empty() ? "" : ",") + to_decimal_string(interp_.values[i]);
          leaf(trace, "tuple", binding, value);
        }
        acc = std::min(acc, value);
      });
      return set(TraceNode::Op::MinFold, acc);
    }
    case Kind::HasSelf: return set(TraceNode::Op::Leaf, eval_role(c.role, x, x));
    case Kind::Modified: {
      Degree inner = eval(*c.children[0], x, child_of(trace), depth + 1);
      if (trace) trace->aux_name = c.name;
      return set(TraceNode::Op::ModifierApply, apply_modifier(modifier(c.name), inner));
    }
    case Kind::Weighted: {
      Degree inner = eval(*c.children[0], x, child_of(trace), depth + 1);
      if (trace) trace->aux = c.weight;
      return set(TraceNode::Op::Scale, Degree(c.weight * inner.value()));
    }
    case Kind::WeightedSum: {
      Rat sum = 0;
      for (const auto& s : c.summands) {
        TraceNode* scale = child_of(trace);
        if (scale) {
          scale->op = TraceNode::Op::Scale;
          scale->label = "w " + to_decimal_string(s.weight);
          scale->aux = s.weight;
        }
        Degree inner = eval(*s.expr, x, child_of(scale), depth + 1);
        Rat term = s.weight * inner.value();
        if (scale) scale->degree = Degree(term);
        sum += term;
      }
      return set(TraceNode::Op::Sum, Degree(sum));
    }
  }
  throw EvalError("unhandled concept kind");
}

Degree Evaluator::concept_inclusion_degree(const ConceptExpr& sub, const ConceptExpr& super) const {
  Degree acc = Degree::one();
  for (const auto& x : interp_.domain) {
    Degree v = implication(family_, eval(sub, x, nullptr, 0), eval(super, x, nullptr, 0));
    acc = std::min(acc, v);
  }
  return acc;
}

Degree Evaluator::role_composition(const std::vector<RoleExpr>& chain, const std::string& x,
                                   const std::string& y) const {
  if (chain.size() == 1) return eval_role(chain[0], x, y);
  Degree acc = Degree::zero();
  for_each_tuple(interp_.domain.size(), chain.size() - 1, [&](const std::vector<std::size_t>& idx) {
    Degree value = eval_role(chain[0], x, interp_.domain[idx[0]]);
    for (std::size_t i = 1; i + 1 < chain.size(); ++i)
      value = tnorm(family_, value, eval_role(chain[i], interp_.domain[idx[i - 1]], interp_.domain[idx[i]]));
    value = tnorm(family_, value, eval_role(chain.back(), interp_.domain[idx[chain.size() - 2]], y));
    acc = std::max(acc, value);
  });
  return acc;
}

AxiomCheck Evaluator::check_axiom(const FuzzyAxiom& ax) const {
  using K = FuzzyAxiomKind;
  AxiomCheck out;
  auto graded = [&](const Degree& computed) {
    out.computed = computed;
    out.holds = computed >= ax.effective_degree();
  };
  switch (ax.kind) {
    case K::ConceptAssertion: graded(eval(*ax.concepts[0], element_of(ax.individuals[0]), nullptr, 0)); break;
    case K::RoleAssertion:
      graded(eval_role(ax.roles[0], element_of(ax.individuals[0]), element_of(ax.individuals[1])));
      break;
    case K::NegatedRoleAssertion:
      graded(negation(family_, eval_role(ax.roles[0], element_of(ax.individuals[0]), element_of(ax.individuals[1]))));
      break;
    case K::DataRoleAssertion:
      graded(eval_concrete_role(ax.concrete_roles[0], element_of(ax.individuals[0]), *ax.value));
      break;
    case K::NegatedDataRoleAssertion:
      graded(negation(family_, eval_concrete_role(ax.concrete_roles[0], element_of(ax.individuals[0]), *ax.value)));
      break;
    case K::DifferentIndividuals:
      out.holds = element_of(ax.individuals[0]) != element_of(ax.individuals[1]);
      break;
    case K::SameIndividuals:
      out.holds = element_of(ax.individuals[0]) == element_of(ax.individuals[1]);
      break;
    case K::ConceptInclusion: graded(concept_inclusion_degree(*ax.concepts[0], *ax.concepts[1])); break;
    case K::ConceptEquivalence: {
      out.holds = true;
      for (const auto& x : interp_.domain) {
        Degree first = eval(*ax.concepts[0], x, nullptr, 0);
        for (std::size_t i = 1; i < ax.concepts.size() && out.holds; ++i)
          out.holds = eval(*ax.concepts[i], x, nullptr, 0) == first;
        if (!out.holds) break;
      }
      break;
    }
    case K::DisjointConcepts: {
      out.holds = true;
      for (const auto& x : interp_.domain) {
        Degree lowest = Degree::one();
        for (const auto& c : ax.concepts) lowest = std::min(lowest, eval(*c, x, nullptr, 0));
        if (lowest != Degree::zero()) {
          out.holds = false;
          break;
        }
      }
      break;
    }
    case K::DisjointUnion: {
      // dis(C2..Cm) plus C1 == C2 (+) ... (+) Cm pointwise.
      out.holds = true;
      for (const auto& x : interp_.domain) {
        Degree lowest = Degree::one();
        Degree joined = Degree::zero();
        for (std::size_t i = 1; i < ax.concepts.size(); ++i) {
          Degree v = eval(*ax.concepts[i], x, nullptr, 0);
          lowest = std::min(lowest, v);
          joined = tconorm(family_, joined, v);
        }
        if (lowest != Degree::zero() || joined != eval(*ax.concepts[0], x, nullptr, 0)) {
          out.holds = false;
          break;
        }
      }
      break;
    }
    case K::RoleInclusion: {
      std::vector<RoleExpr> chain(ax.roles.begin(), ax.roles.end() - 1);
      Degree acc = Degree::one();
      for (const auto& x : interp_.domain)
        for (const auto& y : interp_.domain) {
          Degree v = implication(family_, role_composition(chain, x, y), eval_role(ax.roles.back(), x, y));
          acc = std::min(acc, v);
        }
      graded(acc);
      break;
    }
    case K::DataRoleInclusion: {
      Degree acc = Degree::one();
      for (const auto& x : interp_.domain)
        for (const auto& v : interp_.values) {
          Degree d = implication(family_, eval_concrete_role(ax.concrete_roles[0], x, v),
                                 eval_concrete_role(ax.concrete_roles[1], x, v));
          acc = std::min(acc, d);
        }
      graded(acc);
      break;
    }
    case K::RoleEquivalence: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        for (const auto& y : interp_.domain) {
          Degree first = eval_role(ax.roles[0], x, y);
          for (std::size_t i = 1; i < ax.roles.size() && out.holds; ++i)
            out.holds = eval_role(ax.roles[i], x, y) == first;
          if (!out.holds) break;
        }
      break;
    }
    case K::DataRoleEquivalence: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        for (const auto& v : interp_.values) {
          Degree first = eval_concrete_role(ax.concrete_roles[0], x, v);
          for (std::size_t i = 1; i < ax.concrete_roles.size() && out.holds; ++i)
            out.holds = eval_concrete_role(ax.concrete_roles[i], x, v) == first;
          if (!out.holds) break;
        }
      break;
    }
    case K::RoleDomain: {
      ConceptPtr sub = ax.roles.empty()
                           ? make_data_some(ax.concrete_roles[0], DatatypeExpr::top())
                           : make_some(ax.roles[0], make_top());
      Degree d = concept_inclusion_degree(*sub, *ax.concepts[0]);
      out.computed = d;
      out.holds = d == Degree::one();
      break;
    }
    case K::RoleRange: {
      ConceptPtr super = ax.roles.empty() ? make_data_all(ax.concrete_roles[0], *ax.dtype)
                                          : make_all(ax.roles[0], ax.concepts[0]);
      Degree d = concept_inclusion_degree(*make_top(), *super);
      out.computed = d;
      out.holds = d == Degree::one();
      break;
    }
    case K::FunctionalRole: {
      ConceptPtr super = ax.roles.empty()
                             ? make_data_max_card(1, ax.concrete_roles[0], DatatypeExpr::top())
                             : make_max_card(1, ax.roles[0], make_top());
      Degree d = concept_inclusion_degree(*make_top(), *super);
      out.computed = d;
      out.holds = d == Degree::one();
      break;
    }
    case K::TransitiveRole: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        for (const auto& z : interp_.domain)
          for (const auto& y : interp_.domain) {
            Degree lhs = tnorm(family_, eval_role(ax.roles[0], x, z), eval_role(ax.roles[0], z, y));
            if (lhs > eval_role(ax.roles[0], x, y)) {
              out.holds = false;
              break;
            }
          }
      break;
    }
    case K::DisjointRoles: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        for (const auto& y : interp_.domain) {
          Degree lowest = Degree::one();
          for (const auto& r : ax.roles) lowest = std::min(lowest, eval_role(r, x, y));
          if (lowest != Degree::zero()) {
            out.holds = false;
            break;
          }
        }
      break;
    }
    case K::DisjointDataRoles: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        for (const auto& v : interp_.values) {
          Degree lowest = Degree::one();
          for (const auto& t : ax.concrete_roles) lowest = std::min(lowest, eval_concrete_role(t, x, v));
          if (lowest != Degree::zero()) {
            out.holds = false;
            break;
          }
        }
      break;
    }
    case K::ReflexiveRole: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        if (eval_role(ax.roles[0], x, x) != Degree::one()) {
          out.holds = false;
          break;
        }
      break;
    }
    case K::IrreflexiveRole: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        if (eval_role(ax.roles[0], x, x) != Degree::zero()) {
          out.holds = false;
          break;
        }
      break;
    }
    case K::SymmetricRole: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        for (const auto& y : interp_.domain)
          if (eval_role(ax.roles[0], x, y) != eval_role(ax.roles[0], y, x)) {
            out.holds = false;
            break;
          }
      break;
    }
    case K::AsymmetricRole: {
      out.holds = true;
      for (const auto& x : interp_.domain)
        for (const auto& y : interp_.domain)
          if (eval_role(ax.roles[0], x, y) > Degree::zero() &&
              eval_role(ax.roles[0], y, x) != Degree::zero()) {
            out.holds = false;
            break;
          }
      break;
    }
  }
  return out;
}

KbReport Evaluator::satisfies_kb() const {
  KbReport report;
  for (const auto* box : {&kb_.abox, &kb_.tbox, &kb_.rbox}) {
    for (const auto& ax : *box) {
      AxiomCheck check = check_axiom(ax);
      report.satisfied = report.satisfied && check.holds;
      report.entries.push_back({&ax, check.holds, check.computed});
    }
  }
  return report;
}

Degree Evaluator::bdb_concept(const std::string& individual, const ConceptExpr& c, TraceNode* trace) const {
  return eval_concept(c, element_of(individual), trace);
}

Degree Evaluator::bdb_role(const std::string& a, const std::string& b, const RoleExpr& r) const {
  return eval_role(r, element_of(a), element_of(b));
}

MaximizeResult maximize_degree(const FuzzyKB& kb, const ModelTemplate& tmpl, const GridSpec& grid,
                               const ConceptExpr& target, LogicFamily family) {
  if (grid.params.empty()) throw EvalError("empty grid: no parameters");
  for (const auto& p : grid.params)
    if (p.values.empty()) throw EvalError("empty grid range for parameter '" + p.name + "'");

  MaximizeResult result;
  std::size_t total = grid.point_count();
  bool first = true;
  for (std::size_t index = 0; index < total; ++index) {
    auto assignment = grid.assignment(index);
    FiniteInterpretation interp = tmpl.instantiate(assignment);
    Evaluator ev(kb, interp, family);
    bool have_point = false;
    Degree point_best;
    std::string point_element;
    for (const auto& element : interp.domain) {
      Degree d = ev.eval_concept(target, element);
      if (!have_point || d > point_best) {
        have_point = true;
        point_best = d;
        point_element = element;
      }
    }
    if (!have_point) throw EvalError("the instantiated model has an empty domain");
    if (first || point_best > result.best_degree) {
      first = false;
      result.best_degree = point_best;
      result.best_element = point_element;
      result.best_parameters.clear();
      for (const auto& p : grid.params) result.best_parameters.emplace_back(p.name, assignment.at(p.name));
    }
    ++result.points_evaluated;
  }
  return result;
}

MaximizeResult maximize_degree(const FuzzyKB& kb, const ModelTemplate& tmpl, const GridSpec& grid,
                               const ConceptExpr& target) {
  return maximize_degree(kb, tmpl, grid, target, kb.logic);
}

}  // namespace fowl
