#include <doctest.h>

#include "fowl/kb_builder.hpp"
#include "fowl/owl_parser.hpp"
#include "test_util.hpp"

using namespace fowl;
using testutil::build;
using testutil::count_code;
using testutil::has_code;
using testutil::parse_ok;
using testutil::rat;

namespace {

const char* kVeryModifier =
    R"(Datatype(very Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"modifier\"><Modifier type=\"linear\" c=\"0.8\" /></fuzzyOwl2>")))";

}  // namespace

TEST_CASE("annotated entities become definitions") {
  BuildResult r = build(std::string("Ontology(\n") + kVeryModifier + R"(
Class(C)
Class(VeryC Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"modified\" modifier=\"very\" base=\"C\" /></fuzzyOwl2>"))
)
)");
  REQUIRE(r.ok());
  REQUIRE(r.kb.modifiers.count("very"));
  const ConceptExpr* def = r.kb.find_concept_def("VeryC");
  REQUIRE(def != nullptr);
  CHECK(print_concept(*def) == "(mod very C)");
}

TEST_CASE("axiom degrees, defaults and the selected logic") {
  BuildResult r = build(R"(
Ontology(
Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"ontology\"><FuzzyLogic logic=\"lukasiewicz\" /></fuzzyOwl2>")
Class(Tall)
NamedIndividual(paul)
ClassAssertion(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.5\" /></fuzzyOwl2>") paul Tall)
ClassAssertion(paul Tall)
)
)");
  REQUIRE(r.ok());
  CHECK(r.kb.logic == LogicFamily::Lukasiewicz);
  CHECK(r.kb.logic_explicit);
  REQUIRE(r.kb.abox.size() == 2);
  CHECK(r.kb.abox[0].degree == Degree(rat("0.5")));
  CHECK(!r.kb.abox[1].degree);
  CHECK(r.kb.abox[1].effective_degree() == Degree::one());
  CHECK(print_fuzzy_axiom(r.kb.abox[0]) == "A1 (instance paul Tall) >= 0.5");

  SUBCASE("the default logic is zadeh") {
    BuildResult plain = build("Class(A)");
    CHECK(plain.kb.logic == LogicFamily::Zadeh);
    CHECK(!plain.kb.logic_explicit);
  }
}

TEST_CASE("duplicate annotations and type mismatches") {
  BuildResult dup = build(R"(
Ontology(
Class(Tall) NamedIndividual(paul)
ClassAssertion(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.5\" /></fuzzyOwl2>") Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.7\" /></fuzzyOwl2>") Tall paul)
)
)");
  CHECK(has_code(dup.diagnostics, diag::kDuplicateFuzzyLabel));

  BuildResult mm = build(R"(
Ontology(
ObjectProperty(R Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"weighted\" value=\"0.8\" base=\"C\" /></fuzzyOwl2>"))
)
)");
  CHECK(has_code(mm.diagnostics, diag::kFuzzyTypeMismatch));

  BuildResult degree_on_ungraded = build(R"(
Ontology(
NamedIndividual(a) NamedIndividual(b)
SameIndividual(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.5\" /></fuzzyOwl2>") a b)
)
)");
  CHECK(has_code(degree_on_ungraded.diagnostics, diag::kDegreeOnUngraded));

  BuildResult degree_on_equiv = build(R"(
Ontology(
Class(A) Class(B)
EquivalentClasses(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.5\" /></fuzzyOwl2>") A B)
)
)");
  CHECK(has_code(degree_on_equiv.diagnostics, diag::kDegreeOnUngraded));
}

TEST_CASE("referential restrictions") {
  BuildResult undef_mod = build(R"(
Ontology(
Datatype(Young Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"datatype\"><Datatype type=\"leftshoulder\" a=\"10\" b=\"30\" /></fuzzyOwl2>"))
Datatype(VeryYoung Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"datatype\"><Datatype type=\"modified\" modifier=\"very\" base=\"Young\" /></fuzzyOwl2>"))
)
)");
  CHECK(has_code(undef_mod.diagnostics, diag::kUndefinedModifier));

  BuildResult undef_base = build(std::string("Ontology(\n") + kVeryModifier + R"(
Datatype(VeryYoung Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"datatype\"><Datatype type=\"modified\" modifier=\"very\" base=\"Young\" /></fuzzyOwl2>"))
)
)");
  CHECK(has_code(undef_base.diagnostics, diag::kUndefinedBase));

  BuildResult undeclared = build(R"(
Ontology(
Class(A) NamedIndividual(a)
SubClassOf(A B)
ClassAssertion(ObjectSomeValuesFrom(R A) a)
)
)");
  CHECK(count_code(undeclared.diagnostics, diag::kUndeclaredName) == 2);

  SUBCASE("facets bound the reference interval") {
    BuildResult bad = build(R"(
Ontology(
DatatypeDefinition(D DatatypeRestriction(xsd:integer xsd:minInclusive "50"^^xsd:integer xsd:maxInclusive "200"^^xsd:integer) Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"datatype\"><Datatype type=\"leftshoulder\" a=\"10\" b=\"30\" /></fuzzyOwl2>"))
)
)");
    CHECK(has_code(bad.diagnostics, diag::kDtBreakpointOrder));
  }
}

TEST_CASE("definition cycles per the published examples") {
  // A |-> 0.8*B, B |-> mod(A) is a 2-cycle
  BuildResult two = build(std::string("Ontology(\n") + kVeryModifier + R"(
Class(A Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"weighted\" value=\"0.8\" base=\"B\" /></fuzzyOwl2>"))
Class(B Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"modified\" modifier=\"very\" base=\"A\" /></fuzzyOwl2>"))
)
)");
  CHECK(has_code(two.diagnostics, diag::kDefinitionCycle));
  CHECK(two.kb.concept_defs.empty());  // both dropped

  // A |-> 0.8*A is a self-loop
  BuildResult self_loop = build(R"(
Ontology(
Class(A Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"weighted\" value=\"0.8\" base=\"A\" /></fuzzyOwl2>"))
)
)");
  CHECK(has_code(self_loop.diagnostics, diag::kDefinitionCycle));

  // acyclic chain A |-> mod(B), B atomic
  BuildResult chain = build(std::string("Ontology(\n") + kVeryModifier + R"(
Class(B)
Class(A Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"modified\" modifier=\"very\" base=\"B\" /></fuzzyOwl2>"))
)
)");
  CHECK(!has_code(chain.diagnostics, diag::kDefinitionCycle));
  CHECK(chain.ok());

  SUBCASE("definition_cycle_check reports the cycle names") {
    FuzzyKB kb;
    kb.concept_defs.emplace("A", make_weighted(rat("0.8"), make_atomic("B")));
    kb.concept_def_order.push_back("A");
    kb.concept_defs.emplace("B", make_modified("very", make_atomic("A")));
    kb.concept_def_order.push_back("B");
    auto cycles = definition_cycle_check(kb);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == std::vector<std::string>{"A", "B"});
  }
}

TEST_CASE("equivalence axioms with a named head double as definitions") {
  BuildResult r = build(R"(
Ontology(
Class(A) Class(B) Class(C)
EquivalentClasses(A ObjectIntersectionOf(B C))
)
)");
  REQUIRE(r.ok());
  const ConceptExpr* def = r.kb.find_concept_def("A");
  REQUIRE(def != nullptr);
  CHECK(print_concept(*def) == "(and B C)");
  CHECK(r.kb.equivalence_derived_defs.count("A") == 1);
  REQUIRE(r.kb.tbox.size() == 1);  // the A9 axiom is still recorded
  CHECK(r.kb.tbox[0].kind == FuzzyAxiomKind::ConceptEquivalence);

  // equivalence definitions participate in the cycle check
  BuildResult cyc = build(R"(
Ontology(
Class(A) Class(B)
EquivalentClasses(A ObjectComplementOf(B))
EquivalentClasses(B ObjectComplementOf(A))
)
)");
  CHECK(has_code(cyc.diagnostics, diag::kDefinitionCycle));
}

TEST_CASE("simple role violations") {
  // chain axiom makes R non-simple; R in a cardinality is flagged
  BuildResult card = build(R"(
Ontology(
Class(C) Class(D)
ObjectProperty(R)
SubObjectPropertyOf(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.75\" /></fuzzyOwl2>") ObjectPropertyChain(R R) R)
SubClassOf(ObjectMinCardinality(2 R C) D)
)
)");
  CHECK(has_code(card.diagnostics, diag::kNonSimpleRole));

  // no chain axioms at all: nothing is non-simple
  BuildResult plain = build(R"(
Ontology(
ObjectProperty(R1) ObjectProperty(R2) Class(C)
SubObjectPropertyOf(R1 R2)
SubClassOf(ObjectHasSelf(R1) C)
)
)");
  CHECK(!has_code(plain.diagnostics, diag::kNonSimpleRole));

  // irr(S) with S on the right of a chain
  BuildResult irr = build(R"(
Ontology(
ObjectProperty(S) ObjectProperty(P)
SubObjectPropertyOf(ObjectPropertyChain(P P) S)
IrreflexiveObjectProperty(S)
)
)");
  CHECK(has_code(irr.diagnostics, diag::kNonSimpleRole));

  // subsumption closure: S non-simple, S implies Q, Q used in Self
  BuildResult closure = build(R"(
Ontology(
ObjectProperty(S) ObjectProperty(P) ObjectProperty(Q) Class(C)
SubObjectPropertyOf(ObjectPropertyChain(P P) S)
SubObjectPropertyOf(S Q)
SubClassOf(ObjectHasSelf(Q) C)
)
)");
  CHECK(has_code(closure.diagnostics, diag::kNonSimpleRole));
}

TEST_CASE("to_dl maps the appendix rows") {
  owl::OwlDocument doc = parse_ok(R"(
Ontology(
Class(A) Class(C) ObjectProperty(R) ObjectProperty(S) DataProperty(T)
NamedIndividual(a) NamedIndividual(b) NamedIndividual(c) NamedIndividual(o)
)
)");
  auto dl_of = [&](const std::string& axiom_text) {
    owl::OwlDocument with = doc;
    owl::ParseResult one = owl::parse_document(axiom_text);
    REQUIRE(one.ok());
    REQUIRE(one.document.axioms.size() == 1);
    DlResult r = to_dl(with, one.document.axioms[0]);
    REQUIRE(!has_errors(r.diagnostics));
    return r.axioms;
  };

  auto same = dl_of("SameIndividual(a b c)");
  REQUIRE(same.size() == 3);
  CHECK(print_fuzzy_axiom(same[0]) == "A7 (same a b)");
  CHECK(print_fuzzy_axiom(same[1]) == "A7 (same a c)");
  CHECK(print_fuzzy_axiom(same[2]) == "A7 (same b c)");

  auto exact = dl_of("SubClassOf(ObjectExactCardinality(2 S C) A)");
  REQUIRE(exact.size() == 1);
  CHECK(print_concept(*exact[0].concepts[0]) == "(and (at-least 2 S C) (at-most 2 S C))");

  auto has_value = dl_of("SubClassOf(ObjectHasValue(R o) A)");
  CHECK(print_concept(*has_value[0].concepts[0]) == "(some R (nominal 1 o))");

  auto inv_fun = dl_of("InverseFunctionalObjectProperty(S)");
  CHECK(print_fuzzy_axiom(inv_fun[0]) == "A18 (functional (inverse S))");

  auto inverse = dl_of("InverseObjectProperties(R S)");
  CHECK(print_fuzzy_axiom(inverse[0]) == "A14 (role-equivalent R (inverse S))");

  SUBCASE("unsupported bottom properties are rejected downstream") {
    owl::ParseResult bad = owl::parse_document("SubClassOf(ObjectSomeValuesFrom(BottomObjectProperty C) A)");
    REQUIRE(bad.ok());
    DlResult r = to_dl(doc, bad.document.axioms[0]);
    CHECK(has_code(r.diagnostics, diag::kUnsupportedConstruct));
    owl::ParseResult bad2 = owl::parse_document("SubDataPropertyOf(T TopDataProperty)");
    REQUIRE(bad2.ok());
    DlResult r2 = to_dl(doc, bad2.document.axioms[0]);
    CHECK(has_code(r2.diagnostics, diag::kUnsupportedConstruct));
  }
}

TEST_CASE("building is deterministic") {
  std::string source = R"(
Ontology(
Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"ontology\"><FuzzyLogic logic=\"zadeh\" /></fuzzyOwl2>")
Class(A) Class(B) Class(Q)
ObjectProperty(R)
NamedIndividual(a)
Class(W Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"weightedSum\"><Concept type=\"weighted\" value=\"0.5\" base=\"A\" /><Concept type=\"weighted\" value=\"0.5\" base=\"B\" /></Concept></fuzzyOwl2>"))
SubClassOf(A B)
ClassAssertion(a ObjectSomeValuesFrom(R W))
SubClassOf(MissingOne B)
)
)";
  BuildResult r1 = build(source);
  BuildResult r2 = build(source);
  REQUIRE(r1.diagnostics.size() == r2.diagnostics.size());
  for (std::size_t i = 0; i < r1.diagnostics.size(); ++i) CHECK(r1.diagnostics[i].tsv() == r2.diagnostics[i].tsv());
  auto a1 = r1.kb.axioms_in_source_order();
  auto a2 = r2.kb.axioms_in_source_order();
  REQUIRE(a1.size() == a2.size());
  for (std::size_t i = 0; i < a1.size(); ++i) CHECK(print_fuzzy_axiom(*a1[i]) == print_fuzzy_axiom(*a2[i]));
}

TEST_CASE("stripping annotations keeps the crisp axioms and clears degrees") {
  std::string source = R"(
Ontology(
Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"ontology\"><FuzzyLogic logic=\"lukasiewicz\" /></fuzzyOwl2>")
Class(Tall) Class(A) NamedIndividual(paul)
ClassAssertion(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.5\" /></fuzzyOwl2>") paul Tall)
SubClassOf(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.7\" /></fuzzyOwl2>") Tall A)
)
)";
  owl::OwlDocument doc = parse_ok(source);
  BuildResult with = fowl::build_kb(doc);
  BuildResult without = fowl::build_kb(owl::strip_fuzzy_annotations(doc));
  REQUIRE(with.ok());
  REQUIRE(without.ok());
  CHECK(without.kb.logic == LogicFamily::Zadeh);  // back to the default

  auto crisp = [](const FuzzyKB& kb) {
    std::vector<std::string> out;
    for (const FuzzyAxiom* ax : kb.axioms_in_source_order()) {
      FuzzyAxiom copy = *ax;
      copy.degree.reset();
      out.push_back(print_fuzzy_axiom(copy));
    }
    return out;
  };
  CHECK(crisp(with.kb) == crisp(without.kb));
  for (const FuzzyAxiom* ax : without.kb.axioms_in_source_order())
    CHECK(ax->effective_degree() == Degree::one());
}
