#include <doctest.h>

#include <random>

#include "fowl/owl_parser.hpp"
#include "test_util.hpp"

using namespace fowl;
using namespace fowl::owl;
using testutil::parse_ok;
using testutil::rat;

TEST_CASE("declarations, assertions and annotations") {
  OwlDocument doc = parse_ok(R"(
Ontology(demo
Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"ontology\"><FuzzyLogic logic=\"lukasiewicz\" /></fuzzyOwl2>")
Class(Tall)
NamedIndividual(paul)
ClassAssertion(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.5\" /></fuzzyOwl2>") paul Tall)
)
)");
  CHECK(doc.ontology_name == "demo");
  REQUIRE(doc.ontology_fuzzy_labels.size() == 1);
  CHECK(doc.classes.size() == 1);
  CHECK(doc.individuals.size() == 1);
  REQUIRE(doc.axioms.size() == 1);
  const Axiom& ax = doc.axioms[0];
  CHECK(ax.kind == AxiomKind::ClassAssertion);
  CHECK(ax.maybe_swapped);  // two bare names, resolved later
  REQUIRE(ax.fuzzy_labels.size() == 1);
  CHECK(ax.fuzzy_labels[0].find("Degree value=\"0.5\"") != std::string::npos);
}

TEST_CASE("datatype definitions with restrictions") {
  OwlDocument doc = parse_ok(R"(
DatatypeDefinition ( YoungAge DatatypeRestriction ( xsd:integer xsd:minInclusive "0"^^xsd:integer xsd:maxInclusive "200"^^xsd:integer ) )
)");
  REQUIRE(doc.datatype_definitions.size() == 1);
  const DatatypeDefinition& d = doc.datatype_definitions[0];
  CHECK(d.name == "YoungAge");
  CHECK(d.base_type == "xsd:integer");
  CHECK(d.min_inclusive == rat("0"));
  CHECK(d.max_inclusive == rat("200"));
}

TEST_CASE("entity annotation after the name (listing spelling)") {
  OwlDocument doc = parse_ok(R"(
Class ( VeryC Annotation( fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"modified\" modifier=\"very\" base=\"C\" /></fuzzyOwl2>" ) )
ObjectProperty ( VeryR Annotation( fuzzyLabel "payload" ) )
)");
  REQUIRE(doc.classes.size() == 1);
  CHECK(doc.classes[0].name == "VeryC");
  CHECK(doc.classes[0].fuzzy_labels.size() == 1);
  CHECK(doc.object_properties[0].fuzzy_labels.size() == 1);
}

TEST_CASE("class expressions parse structurally") {
  OwlDocument doc = parse_ok(R"(
Class(A) Class(B) ObjectProperty(R) DataProperty(T) NamedIndividual(o) Datatype(D)
SubClassOf(ObjectIntersectionOf(A ObjectComplementOf(A)) B)
SubClassOf(ObjectExactCardinality(2 R A) B)
SubClassOf(DataSomeValuesFrom(T D) B)
SubClassOf(ObjectOneOf(o) B)
SubClassOf(ObjectHasSelf(R) B)
SubClassOf(ObjectMinCardinality(2 R) B)
SubClassOf(DataHasValue(T "20"^^xsd:integer) B)
)");
  REQUIRE(doc.axioms.size() == 7);
  const ClassExpr& e = *doc.axioms[0].classes[0];
  CHECK(e.kind == ClassExpr::Kind::IntersectionOf);
  REQUIRE(e.operands.size() == 2);
  CHECK(e.operands[1]->kind == ClassExpr::Kind::ComplementOf);
  CHECK(doc.axioms[1].classes[0]->kind == ClassExpr::Kind::ExactCardinality);
  CHECK(doc.axioms[5].classes[0]->qualified == false);
  CHECK(doc.axioms[6].classes[0]->literal == rat("20"));
}

TEST_CASE("parse errors carry line and column and recover") {
  ParseResult r = parse_document(R"(Class(A)
SubClassOf(A
Class(B)
)");
  CHECK(!r.ok());
  REQUIRE(!r.diagnostics.empty());
  CHECK(r.diagnostics[0].code == std::string(diag::kOwlParse));
  CHECK(!r.diagnostics[0].location.empty());

  ParseResult unknown = parse_document("Frobnicate(A B)\nClass(C)");
  CHECK(!unknown.ok());
  CHECK(unknown.diagnostics[0].message.find("unknown construct name") != std::string::npos);
  CHECK(unknown.diagnostics[0].location.rfind("1:", 0) == 0);
  // recovery continues with the next statement
  CHECK(unknown.document.classes.size() == 1);

  CHECK(!parse_document("ClassAssertion(paul Tall").ok());    // unbalanced
  CHECK(!parse_document("SameIndividual(a)").ok());           // arity
  CHECK(!parse_document("Class(\x01)").ok());                 // lexical
}

TEST_CASE("parsing is total on fuzzed input") {
  std::mt19937 rng(1234);
  std::string valid = "Ontology(Class(A) NamedIndividual(a) ClassAssertion(a A))";
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<std::size_t> pos(0, valid.size() - 1);
  for (int i = 0; i < 300; ++i) {
    std::string s;
    if (i % 2 == 0) {
      std::uniform_int_distribution<int> len(0, 80);
      int n = len(rng);
      for (int k = 0; k < n; ++k) s += static_cast<char>(byte(rng));
    } else {
      s = valid;
      for (int k = 0; k < 4; ++k) s[pos(rng)] = static_cast<char>(byte(rng));
    }
    ParseResult r = parse_document(s);  // must not crash
    CHECK((r.ok() || !r.diagnostics.empty()));
  }
}

TEST_CASE("printer is a parse fixpoint") {
  std::string source = R"(
Ontology(demo
Annotation(fuzzyLabel "<x a=\"1\" />")
Class(A) Class(B) Class(C)
ObjectProperty(R) ObjectProperty(S) DataProperty(T)
NamedIndividual(a) NamedIndividual(b) NamedIndividual(o)
Datatype(D)
DatatypeDefinition(Young DatatypeRestriction(xsd:integer xsd:minInclusive "0"^^xsd:integer xsd:maxInclusive "200"^^xsd:integer))
SubClassOf(A ObjectUnionOf(B ObjectAllValuesFrom(R ObjectSomeValuesFrom(ObjectInverseOf(S) A))))
SubClassOf(ObjectMaxCardinality(1 R A) ObjectMinCardinality(2 S) )
SubClassOf(DataMinCardinality(1 T D) DataMaxCardinality(2 T))
EquivalentClasses(A ObjectIntersectionOf(B C))
DisjointClasses(B C)
DisjointUnion(A B C)
SameIndividual(a b o)
DifferentIndividuals(a b)
ObjectPropertyAssertion(R a b)
NegativeObjectPropertyAssertion(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"></fuzzyOwl2>") R a b)
DataPropertyAssertion(T a "25"^^xsd:integer)
NegativeDataPropertyAssertion(T a 25)
SubObjectPropertyOf(ObjectPropertyChain(R S) R)
SubObjectPropertyOf(R S)
SubDataPropertyOf(T T)
EquivalentObjectProperties(R S)
ObjectPropertyDomain(R A)
ObjectPropertyRange(R B)
DataPropertyDomain(T A)
DataPropertyRange(T Young)
InverseObjectProperties(R S)
FunctionalObjectProperty(R)
InverseFunctionalObjectProperty(S)
TransitiveObjectProperty(R)
DisjointObjectProperties(R S)
ReflexiveObjectProperty(R)
IrreflexiveObjectProperty(S)
SymmetricObjectProperty(R)
AsymmetricObjectProperty(S)
FunctionalDataProperty(T)
ClassAssertion(ObjectSomeValuesFrom(R ObjectOneOf(o)) a)
ClassAssertion(a ObjectHasValue(R o))
ClassAssertion(owl:Thing a)
ClassAssertion(a A)
)
)";
  OwlDocument doc = parse_ok(source);
  std::string once = print_document(doc);
  OwlDocument reparsed = parse_ok(once);
  std::string twice = print_document(reparsed);
  CHECK(once == twice);
}
