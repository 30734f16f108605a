#include <doctest.h>

#include <random>

#include "fowl/translator.hpp"
#include "test_util.hpp"

using namespace fowl;
using testutil::build;
using testutil::rat;

namespace {

struct Row {
  ConstructTag tag;
  Support fuzzydl;
  Support delorean;
};

// The published support matrix, transcribed row by row.
const Row kMatrix[] = {
    {ConstructTag::C1, Support::Yes, Support::Yes},   {ConstructTag::C2, Support::Yes, Support::Yes},
    {ConstructTag::C3, Support::Yes, Support::Yes},   {ConstructTag::C4, Support::Yes, Support::Yes},
    {ConstructTag::C5, Support::Yes, Support::Yes},   {ConstructTag::C6, Support::Yes, Support::Yes},
    {ConstructTag::C7, Support::Yes, Support::Yes},   {ConstructTag::C8, Support::Yes, Support::Yes},
    {ConstructTag::C9, Support::Yes, Support::Yes},   {ConstructTag::C10, Support::Yes, Support::Yes},
    {ConstructTag::C11, Support::No, Support::Yes},   {ConstructTag::C12, Support::No, Support::Yes},
    {ConstructTag::C13, Support::No, Support::Yes},   {ConstructTag::C14, Support::No, Support::Yes},
    {ConstructTag::C15, Support::No, Support::Yes},   {ConstructTag::C16, Support::Yes, Support::Yes},
    {ConstructTag::C17, Support::Yes, Support::Yes},  {ConstructTag::C18, Support::Yes, Support::No},
    {ConstructTag::C19, Support::Yes, Support::No},   {ConstructTag::R1, Support::Yes, Support::Yes},
    {ConstructTag::R2, Support::Yes, Support::Yes},   {ConstructTag::R3, Support::No, Support::Yes},
    {ConstructTag::R4, Support::No, Support::No},     {ConstructTag::R5, Support::Yes, Support::Yes},
    {ConstructTag::A1, Support::Yes, Support::Yes},   {ConstructTag::A2, Support::Yes, Support::Yes},
    {ConstructTag::A3, Support::No, Support::Yes},    {ConstructTag::A4, Support::Yes, Support::Yes},
    {ConstructTag::A5, Support::Yes, Support::Yes},   {ConstructTag::A6, Support::No, Support::Yes},
    {ConstructTag::A7, Support::No, Support::Yes},    {ConstructTag::A8, Support::Yes, Support::Yes},
    {ConstructTag::A9, Support::Yes, Support::Yes},   {ConstructTag::A10, Support::Yes, Support::Yes},
    {ConstructTag::A11, Support::Yes, Support::Yes},  {ConstructTag::A12, Support::Partial, Support::Yes},
    {ConstructTag::A13, Support::Yes, Support::Yes},  {ConstructTag::A14, Support::Yes, Support::Yes},
    {ConstructTag::A15, Support::Yes, Support::Yes},  {ConstructTag::A16, Support::Yes, Support::Yes},
    {ConstructTag::A17, Support::Yes, Support::Yes},  {ConstructTag::A18, Support::Yes, Support::Yes},
    {ConstructTag::A19, Support::Yes, Support::Yes},  {ConstructTag::A20, Support::No, Support::Yes},
    {ConstructTag::A21, Support::No, Support::Yes},   {ConstructTag::A22, Support::Yes, Support::Yes},
    {ConstructTag::A23, Support::No, Support::Yes},   {ConstructTag::A24, Support::Yes, Support::Yes},
    {ConstructTag::A25, Support::No, Support::Yes},
};

}  // namespace

TEST_CASE("profiles reproduce the support matrix") {
  for (const Row& row : kMatrix) {
    CAPTURE(construct_tag_name(row.tag));
    CHECK(TargetProfile::fuzzydl().support(row.tag) == row.fuzzydl);
    CHECK(TargetProfile::delorean().support(row.tag) == row.delorean);
    CHECK(TargetProfile::generic().support(row.tag) == Support::Yes);
  }
  CHECK(TargetProfile::by_name("fuzzydl") == &TargetProfile::fuzzydl());
  CHECK(TargetProfile::by_name("nonesuch") == nullptr);
}

TEST_CASE("capability report counts occurrences") {
  BuildResult r = build(R"(
Ontology(
Class(A) Class(B) NamedIndividual(a)
ClassAssertion(a ObjectIntersectionOf(A B))
)
)");
  REQUIRE(r.ok());

  SUBCASE("empty KB yields an empty report") {
    FuzzyKB empty;
    CHECK(capability_report(empty, TargetProfile::fuzzydl()).empty());
  }

  auto report = capability_report(r.kb, TargetProfile::fuzzydl());
  bool saw_c1 = false, saw_c4 = false, saw_a1 = false;
  for (const auto& e : report) {
    if (e.tag == ConstructTag::C1) {
      saw_c1 = true;
      CHECK(e.count == 2);
      CHECK(e.support == Support::Yes);
    }
    if (e.tag == ConstructTag::C4) {
      saw_c4 = true;
      CHECK(e.count == 1);
    }
    if (e.tag == ConstructTag::A1) saw_a1 = true;
    CHECK(e.supported());
  }
  CHECK(saw_c1);
  CHECK(saw_c4);
  CHECK(saw_a1);
}

TEST_CASE("capability gating") {
  SUBCASE("fuzzy nominal is rejected by fuzzydl, accepted by delorean") {
    BuildResult r = build(R"(
Ontology(
Class(A) NamedIndividual(ind)
Class(Ind075 Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"nominal\" value=\"0.75\" individual=\"ind\" /></fuzzyOwl2>"))
SubClassOf(Ind075 A)
)
)");
    REQUIRE(r.ok());
    TranslateResult bad = translate(r.kb, TargetProfile::fuzzydl());
    CHECK(!bad.ok());
    REQUIRE(!bad.diagnostics.empty());
    CHECK(bad.diagnostics[0].message.find("C11 unsupported by fuzzydl") != std::string::npos);
    CHECK(translate(r.kb, TargetProfile::delorean()).ok());
    CHECK(translate(r.kb, TargetProfile::generic()).ok());
  }

  SUBCASE("weighted sums are rejected by delorean, accepted by fuzzydl") {
    BuildResult r = build(R"(
Ontology(
Class(A) Class(B)
Class(W Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"weightedSum\"><Concept type=\"weighted\" value=\"0.5\" base=\"A\" /><Concept type=\"weighted\" value=\"0.5\" base=\"B\" /></Concept></fuzzyOwl2>"))
)
)");
    REQUIRE(r.ok());
    TranslateResult bad = translate(r.kb, TargetProfile::delorean());
    CHECK(!bad.ok());
    CHECK(bad.diagnostics[0].message.find("C19 unsupported by delorean") != std::string::npos);
    CHECK(translate(r.kb, TargetProfile::fuzzydl()).ok());
  }

  SUBCASE("chains of length two violate the partial A12 entry") {
    BuildResult r = build(R"(
Ontology(
ObjectProperty(R)
SubObjectPropertyOf(ObjectPropertyChain(R R) R)
)
)");
    REQUIRE(r.ok());
    TranslateResult bad = translate(r.kb, TargetProfile::fuzzydl());
    CHECK(!bad.ok());
    CHECK(bad.diagnostics[0].message.find("restricted to the case m = 1") != std::string::npos);
    CHECK(translate(r.kb, TargetProfile::delorean()).ok());

    BuildResult plain = build(R"(
Ontology(
ObjectProperty(R) ObjectProperty(S)
SubObjectPropertyOf(R S)
)
)");
    CHECK(translate(plain.kb, TargetProfile::fuzzydl()).ok());
  }

  SUBCASE("modified roles are rejected by both targets") {
    BuildResult r = build(R"(
Ontology(
Datatype(very Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"modifier\"><Modifier type=\"linear\" c=\"0.8\" /></fuzzyOwl2>"))
ObjectProperty(R)
ObjectProperty(VeryR Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"role\"><Role type=\"modified\" modifier=\"very\" base=\"R\" /></fuzzyOwl2>"))
)
)");
    REQUIRE(r.ok());  // warning only
    CHECK(has_warnings(r.diagnostics));
    CHECK(!translate(r.kb, TargetProfile::fuzzydl()).ok());
    CHECK(!translate(r.kb, TargetProfile::delorean()).ok());
    CHECK(translate(r.kb, TargetProfile::generic()).ok());
  }
}

TEST_CASE("translation is deterministic and errors exactly when unsupported") {
  BuildResult r = build(R"(
Ontology(
Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"ontology\"><FuzzyLogic logic=\"lukasiewicz\" /></fuzzyOwl2>")
Datatype(very Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"modifier\"><Modifier type=\"linear\" c=\"0.8\" /></fuzzyOwl2>"))
Datatype(Young Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"datatype\"><Datatype type=\"leftshoulder\" a=\"10\" b=\"30\" /></fuzzyOwl2>"))
Class(C)
Class(VeryC Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"concept\"><Concept type=\"modified\" modifier=\"very\" base=\"C\" /></fuzzyOwl2>"))
NamedIndividual(paul)
DataProperty(hasAge)
ClassAssertion(Annotation(fuzzyLabel "<fuzzyOwl2 fuzzyType=\"axiom\"><Degree value=\"0.5\" /></fuzzyOwl2>") paul VeryC)
SubClassOf(VeryC C)
DataPropertyRange(hasAge Young)
)
)");
  REQUIRE(r.ok());
  for (const TargetProfile* t :
       {&TargetProfile::generic(), &TargetProfile::fuzzydl(), &TargetProfile::delorean()}) {
    TranslateResult once = translate(r.kb, *t);
    TranslateResult twice = translate(r.kb, *t);
    REQUIRE(once.ok());
    CHECK(*once.text == *twice.text);
    // translate fails exactly when the capability report has unsupported rows
    bool all_supported = true;
    for (const auto& e : capability_report(r.kb, *t)) all_supported = all_supported && e.supported();
    CHECK(all_supported == once.ok());
  }

  TranslateResult generic = translate(r.kb, TargetProfile::generic());
  CHECK(generic.text->find("logic lukasiewicz\n") == 0);
  CHECK(generic.text->find("modifier very linear 0.8") != std::string::npos);
  CHECK(generic.text->find("axiom A1 (instance paul VeryC) >= 0.5") != std::string::npos);

  TranslateResult fdl = translate(r.kb, TargetProfile::fuzzydl());
  CHECK(fdl.text->find("(define-fuzzy-logic lukasiewicz)") == 0);
  CHECK(fdl.text->find("(instance paul VeryC 0.5)") != std::string::npos);
  CHECK(fdl.text->find("(implies VeryC C)") != std::string::npos);  // degree 1 omitted

  TranslateResult dl = translate(r.kb, TargetProfile::delorean());
  CHECK(dl.text->find("fuzzyLogic(lukasiewicz);") == 0);
  CHECK(dl.text->find("instance(paul, VeryC, 0.5);") != std::string::npos);
  CHECK(dl.text->find("gci(VeryC, C);") != std::string::npos);
}

TEST_CASE("generic never errors on random valid KBs") {
  std::mt19937 rng(77);
  FuzzyKB kb = testutil::property_kb();
  kb.declared_classes = {"A0", "A1", "A2"};
  for (int i = 0; i < 20; ++i) {
    FuzzyAxiom ax;
    ax.kind = FuzzyAxiomKind::ConceptAssertion;
    ax.concepts.push_back(testutil::random_concept(rng, 3));
    ax.individuals.push_back("i0");
    ax.source_index = i;
    kb.abox.push_back(ax);
  }
  TranslateResult out = translate(kb, TargetProfile::generic());
  CHECK(out.ok());
}
