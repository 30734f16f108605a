#include <doctest.h>

#include <random>

#include "fowl/evaluator.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace fowl;
using testutil::deg;
using testutil::rat;

namespace {

// The young-human example: one element, one age value.
struct YoungHumanSetup {
  FuzzyKB kb;
  FiniteInterpretation interp;

  YoungHumanSetup() {
    kb.logic = LogicFamily::Zadeh;
    kb.datatypes.emplace("YoungAge", DatatypeExpr::from_shape(MembershipShape::left(
                                         rat("0"), rat("200"), rat("10"), rat("30"))));
    kb.datatype_order.push_back("YoungAge");
    kb.modifiers.emplace("very", ModifierDef::linear(rat("0.8")));
    kb.modifier_order.push_back("very");

    interp.domain = {"a"};
    interp.values = {rat("20")};
    interp.individual_map["anna"] = "a";
    interp.bound_concepts.insert("Human");
    interp.concept_table[{"Human", "a"}] = Degree::one();
    interp.bound_concrete_roles.insert("hasAge");
    interp.concrete_role_table[{"hasAge", "a", rat("20")}] = Degree::one();
  }
};

}  // namespace

TEST_CASE("concept evaluation follows the table semantics") {
  YoungHumanSetup s;
  Evaluator ev(s.kb, s.interp);

  CHECK(ev.eval_concept(*make_top(), "a") == Degree::one());
  CHECK(ev.eval_concept(*make_bottom(), "a") == Degree::zero());

  ConceptPtr young_human =
      make_and({make_atomic("Human"), make_data_some("hasAge", DatatypeExpr::named("YoungAge"))});
  CHECK(ev.eval_concept(*young_human, "a") == deg("0.5"));

  // weighted sum arithmetic: 0.8*A + 0.2*B with A=0.5, B=1
  FiniteInterpretation wi;
  wi.domain = {"x"};
  wi.bound_concepts = {"A", "B"};
  wi.concept_table[{"A", "x"}] = deg("0.5");
  wi.concept_table[{"B", "x"}] = deg("1");
  FuzzyKB empty_kb;
  Evaluator wev(empty_kb, wi, LogicFamily::Zadeh);
  ConceptPtr wsum = make_weighted_sum({{rat("0.8"), make_atomic("A")}, {rat("0.2"), make_atomic("B")}});
  CHECK(wev.eval_concept(*wsum, "x") == deg("0.6"));

  SUBCASE("unbound names raise") {
    CHECK_THROWS_AS(ev.eval_concept(*make_atomic("Unknown"), "a"), EvalError);
    CHECK_THROWS_AS(ev.eval_concept(*make_top(), "nowhere"), EvalError);
  }
}

TEST_CASE("role evaluation") {
  FuzzyKB kb;
  kb.modifiers.emplace("id", ModifierDef::linear(rat("1")));
  kb.modifier_order.push_back("id");
  FiniteInterpretation I;
  I.domain = {"a", "b"};
  I.bound_roles.insert("S");
  I.role_table[{"S", "a", "b"}] = deg("0.4");
  Evaluator ev(kb, I, LogicFamily::Zadeh);

  CHECK(ev.eval_role(RoleExpr::universal(), "a", "b") == Degree::one());
  CHECK(ev.eval_role(RoleExpr::inverse(RoleExpr::atomic("S")), "b", "a") == deg("0.4"));
  CHECK(ev.eval_role(RoleExpr::atomic("S"), "b", "a") == Degree::zero());

  I.role_table[{"S", "a", "b"}] = deg("0.37");
  Evaluator ev2(kb, I, LogicFamily::Zadeh);
  CHECK(ev2.eval_role(RoleExpr::modified("id", RoleExpr::atomic("S")), "a", "b") == deg("0.37"));
}

TEST_CASE("datatype evaluation") {
  YoungHumanSetup s;
  Evaluator ev(s.kb, s.interp);

  CHECK(ev.eval_datatype(DatatypeExpr::named("YoungAge"), rat("30")) == Degree::zero());
  CHECK(ev.eval_datatype(DatatypeExpr::named("YoungAge"), rat("10")) == Degree::one());
  CHECK(ev.eval_datatype(DatatypeExpr::named("YoungAge"), rat("20")) == deg("0.5"));

  // two-stage: membership then hedge
  Degree expected = apply_modifier(ModifierDef::linear(rat("0.8")), deg("0.5"));
  CHECK(ev.eval_datatype(DatatypeExpr::modified("very", DatatypeExpr::named("YoungAge")), rat("20")) == expected);

  MembershipShape tri = MembershipShape::triangular(rat("0"), rat("1"), rat("0.6"), rat("0.7"), rat("0.8"));
  CHECK(ev.eval_datatype(DatatypeExpr::from_shape(tri), rat("0.7")) == Degree::one());

  CHECK_THROWS_AS(ev.eval_datatype(DatatypeExpr::named("YoungAge"), rat("500")), std::domain_error);
  CHECK(ev.eval_datatype(DatatypeExpr::singleton(rat("5")), rat("5")) == Degree::one());
  CHECK(ev.eval_datatype(DatatypeExpr::singleton(rat("5")), rat("6")) == Degree::zero());
  CHECK(ev.eval_datatype(DatatypeExpr::top(), rat("123")) == Degree::one());
}

TEST_CASE("axiom checks") {
  FuzzyKB kb;
  kb.logic = LogicFamily::Lukasiewicz;
  FiniteInterpretation I;
  I.domain = {"a", "b", "c"};
  I.individual_map = {{"paul", "a"}, {"mary", "b"}};
  I.bound_concepts = {"Tall", "C", "D"};
  I.concept_table[{"Tall", "a"}] = deg("0.5");
  I.bound_roles.insert("R");
  I.role_table[{"R", "a", "b"}] = deg("0.8");
  I.role_table[{"R", "b", "c"}] = deg("0.7");
  I.role_table[{"R", "a", "c"}] = deg("0.4");
  Evaluator ev(kb, I);

  SUBCASE("graded concept assertion") {
    FuzzyAxiom ax;
    ax.kind = FuzzyAxiomKind::ConceptAssertion;
    ax.concepts.push_back(make_atomic("Tall"));
    ax.individuals.push_back("paul");
    ax.degree = deg("0.5");
    AxiomCheck check = ev.check_axiom(ax);
    CHECK(check.holds);
    CHECK(check.computed == deg("0.5"));
    ax.degree = deg("0.6");
    CHECK(!ev.check_axiom(ax).holds);
  }

  SUBCASE("transitivity counterexample under lukasiewicz") {
    FuzzyAxiom trans;
    trans.kind = FuzzyAxiomKind::TransitiveRole;
    trans.roles.push_back(RoleExpr::atomic("R"));
    // 0.8 (x) 0.7 = 0.5 > 0.4
    CHECK(!ev.check_axiom(trans).holds);
    Rat witness = oracle::t_norm(LogicFamily::Lukasiewicz, rat("0.8"), rat("0.7"));
    CHECK(witness == rat("0.5"));
  }

  SUBCASE("goedel inclusion with pointwise dominance computes 1") {
    FiniteInterpretation J;
    J.domain = {"x", "y"};
    J.bound_concepts = {"C", "D"};
    J.concept_table[{"C", "x"}] = deg("0.3");
    J.concept_table[{"D", "x"}] = deg("0.6");
    J.concept_table[{"C", "y"}] = deg("0.2");
    J.concept_table[{"D", "y"}] = deg("0.2");
    Evaluator gev(kb, J, LogicFamily::Godel);
    FuzzyAxiom gci;
    gci.kind = FuzzyAxiomKind::ConceptInclusion;
    gci.concepts = {make_atomic("C"), make_atomic("D")};
    gci.degree = Degree::one();
    AxiomCheck check = gev.check_axiom(gci);
    CHECK(check.holds);
    CHECK(check.computed == Degree::one());
  }

  SUBCASE("role inclusion with a chain") {
    FuzzyAxiom ria;
    ria.kind = FuzzyAxiomKind::RoleInclusion;
    ria.roles = {RoleExpr::atomic("R"), RoleExpr::atomic("R"), RoleExpr::atomic("R")};
    ria.degree = deg("0.75");
    AxiomCheck check = ev.check_axiom(ria);
    // composition through b: 0.8 (x) 0.7 = 0.5; implication 0.5 => 0.4 = 0.9
    CHECK(check.computed == deg("0.9"));
    CHECK(check.holds);
    Rat computed;
    CHECK(oracle::axiom_holds(kb, I, LogicFamily::Lukasiewicz, ria, &computed));
    CHECK(computed == rat("0.9"));
  }
}

TEST_CASE("satisfies_kb") {
  FuzzyKB kb;
  FiniteInterpretation I;
  I.domain = {"a"};
  I.individual_map["paul"] = "a";
  I.bound_concepts.insert("Tall");
  I.concept_table[{"Tall", "a"}] = deg("0.4");
  Evaluator ev(kb, I);

  SUBCASE("an empty KB is vacuously satisfied") {
    KbReport report = ev.satisfies_kb();
    CHECK(report.satisfied);
    CHECK(report.entries.empty());
  }

  SUBCASE("one failing assertion flips the verdict and is flagged") {
    FuzzyAxiom ok_ax;
    ok_ax.kind = FuzzyAxiomKind::ConceptAssertion;
    ok_ax.concepts.push_back(make_atomic("Tall"));
    ok_ax.individuals.push_back("paul");
    ok_ax.degree = deg("0.3");
    FuzzyAxiom bad_ax = ok_ax;
    bad_ax.degree = deg("0.9");
    kb.abox = {ok_ax, bad_ax};
    Evaluator ev2(kb, I);
    KbReport report = ev2.satisfies_kb();
    CHECK(!report.satisfied);
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].holds);
    CHECK(!report.entries[1].holds);
  }
}

TEST_CASE("bdb over the model") {
  FuzzyKB kb;
  FiniteInterpretation I;
  I.domain = {"a", "b"};
  I.individual_map["paul"] = "a";
  I.individual_map["mary"] = "b";
  I.bound_concepts.insert("Tall");
  I.concept_table[{"Tall", "a"}] = deg("0.5");
  I.bound_roles.insert("isFriendOf");
  I.role_table[{"isFriendOf", "a", "b"}] = deg("0.75");
  Evaluator ev(kb, I);
  CHECK(ev.bdb_concept("paul", *make_atomic("Tall")) == deg("0.5"));
  CHECK(ev.bdb_concept("paul", *make_bottom()) == Degree::zero());
  ConceptPtr wsum = make_weighted_sum({{rat("0.6"), make_atomic("Tall")}, {rat("0.4"), make_top()}});
  CHECK(ev.bdb_concept("paul", *wsum) == Degree(rat("0.6") * rat("0.5") + rat("0.4")));
  CHECK(ev.bdb_role("paul", "mary", RoleExpr::atomic("isFriendOf")) == deg("0.75"));
  CHECK(ev.bdb_role("mary", "paul", RoleExpr::atomic("isFriendOf")) == Degree::zero());
  CHECK_THROWS_AS(ev.bdb_concept("ghost", *make_top()), EvalError);
}

TEST_CASE("boundary and duality properties") {
  std::mt19937 rng(21);
  FuzzyKB kb = testutil::property_kb();
  for (int i = 0; i < 40; ++i) {
    FiniteInterpretation I = testutil::random_interpretation(rng);
    Evaluator zadeh(kb, I, LogicFamily::Zadeh);
    for (const auto& x : I.domain) {
      CHECK(zadeh.eval_concept(*make_top(), x) == Degree::one());
      CHECK(zadeh.eval_concept(*make_bottom(), x) == Degree::zero());
      ConceptPtr nom = make_nominal(Degree::one(), "i0");
      CHECK(zadeh.eval_concept(*nom, x) == (x == I.individual_map.at("i0") ? Degree::one() : Degree::zero()));
    }
    // not exists R.C == all R. not C for the involutive families
    ConceptPtr c = testutil::random_concept(rng, 2);
    RoleExpr role = testutil::random_role(rng);
    ConceptPtr lhs = make_not(make_some(role, c));
    ConceptPtr rhs = make_all(role, make_not(c));
    for (LogicFamily f : {LogicFamily::Zadeh, LogicFamily::Lukasiewicz}) {
      Evaluator ev(kb, I, f);
      for (const auto& x : I.domain) CHECK(ev.eval_concept(*lhs, x) == ev.eval_concept(*rhs, x));
    }
  }
}

TEST_CASE("monotone constructs never decrease when tables grow") {
  std::mt19937 rng(22);
  FuzzyKB kb = testutil::property_kb();
  for (int i = 0; i < 30; ++i) {
    FiniteInterpretation I = testutil::random_interpretation(rng);
    // a negation/forall-free concept
    ConceptPtr c = make_or({make_some(RoleExpr::atomic("R0"), make_atomic("A0")),
                            make_and({make_atomic("A1"), make_atomic("A2")})});
    ConceptPtr ws = make_weighted_sum({{rat("0.5"), c}, {rat("0.5"), make_atomic("A0")}});
    FiniteInterpretation J = I;
    for (auto& [key, value] : J.concept_table) {
      Rat grown = value.value() + (1 - value.value()) / 2;
      value = Degree(grown);
    }
    for (LogicFamily f : {LogicFamily::Zadeh, LogicFamily::Godel, LogicFamily::Lukasiewicz,
                          LogicFamily::Product}) {
      Evaluator before(kb, I, f);
      Evaluator after(kb, J, f);
      for (const auto& x : I.domain) {
        CHECK(before.eval_concept(*c, x) <= after.eval_concept(*c, x));
        CHECK(before.eval_concept(*ws, x) <= after.eval_concept(*ws, x));
      }
    }
  }
}

TEST_CASE("domain/range/functional reductions agree with explicit axioms") {
  std::mt19937 rng(23);
  FuzzyKB kb = testutil::property_kb();
  for (int i = 0; i < 25; ++i) {
    FiniteInterpretation I = testutil::random_interpretation(rng);
    Evaluator ev(kb, I, LogicFamily::Lukasiewicz);

    FuzzyAxiom domain_ax;
    domain_ax.kind = FuzzyAxiomKind::RoleDomain;
    domain_ax.roles.push_back(RoleExpr::atomic("R0"));
    domain_ax.concepts.push_back(make_atomic("A0"));
    FuzzyAxiom domain_red;
    domain_red.kind = FuzzyAxiomKind::ConceptInclusion;
    domain_red.concepts = {make_some(RoleExpr::atomic("R0"), make_top()), make_atomic("A0")};
    domain_red.degree = Degree::one();
    CHECK(ev.check_axiom(domain_ax).holds == ev.check_axiom(domain_red).holds);

    FuzzyAxiom range_ax;
    range_ax.kind = FuzzyAxiomKind::RoleRange;
    range_ax.roles.push_back(RoleExpr::atomic("R0"));
    range_ax.concepts.push_back(make_atomic("A1"));
    FuzzyAxiom range_red;
    range_red.kind = FuzzyAxiomKind::ConceptInclusion;
    range_red.concepts = {make_top(), make_all(RoleExpr::atomic("R0"), make_atomic("A1"))};
    range_red.degree = Degree::one();
    CHECK(ev.check_axiom(range_ax).holds == ev.check_axiom(range_red).holds);

    FuzzyAxiom func_ax;
    func_ax.kind = FuzzyAxiomKind::FunctionalRole;
    func_ax.roles.push_back(RoleExpr::atomic("R1"));
    FuzzyAxiom func_red;
    func_red.kind = FuzzyAxiomKind::ConceptInclusion;
    func_red.concepts = {make_top(), make_max_card(1, RoleExpr::atomic("R1"), make_top())};
    func_red.degree = Degree::one();
    CHECK(ev.check_axiom(func_ax).holds == ev.check_axiom(func_red).holds);
  }
}

TEST_CASE("evaluation matches the brute-force oracle on random input") {
  std::mt19937 rng(4242);
  FuzzyKB kb = testutil::property_kb();
  const LogicFamily families[] = {LogicFamily::Zadeh, LogicFamily::Godel, LogicFamily::Lukasiewicz,
                                  LogicFamily::Product};
  for (int i = 0; i < 80; ++i) {
    FiniteInterpretation I = testutil::random_interpretation(rng);
    ConceptPtr c = testutil::random_concept(rng, 3);
    LogicFamily f = families[i % 4];
    Evaluator ev(kb, I, f);
    for (const auto& x : I.domain) {
      Degree got = ev.eval_concept(*c, x);
      Rat want = oracle::concept_value(kb, I, f, *c, x);
      CHECK_MESSAGE(got.value() == want, print_concept(*c), " at ", x);
    }
  }
}

TEST_CASE("traces recombine to the recorded degrees") {
  std::mt19937 rng(31);
  FuzzyKB kb = testutil::property_kb();
  std::function<void(const FuzzyKB&, LogicFamily, const TraceNode&)> check_node =
      [&](const FuzzyKB& k, LogicFamily f, const TraceNode& node) {
        CHECK(recombine_trace(k, f, node) == node.degree);
        for (const auto& child : node.children) check_node(k, f, child);
      };
  for (int i = 0; i < 25; ++i) {
    FiniteInterpretation I = testutil::random_interpretation(rng);
    ConceptPtr c = testutil::random_concept(rng, 3);
    LogicFamily f = i % 2 ? LogicFamily::Lukasiewicz : LogicFamily::Product;
    Evaluator ev(kb, I, f);
    EvalResult result = ev.eval_concept_traced(*c, I.domain[0]);
    REQUIRE(result.trace.has_value());
    CHECK(result.trace->degree == result.degree);
    check_node(kb, f, *result.trace);
    CHECK(!format_trace(*result.trace).empty());
  }
}

TEST_CASE("maximize_degree") {
  FuzzyKB kb;
  kb.datatypes.emplace("ls22000-24000", DatatypeExpr::from_shape(MembershipShape::left(
                                            rat("22000"), rat("24000"), rat("22000"), rat("24000"))));
  kb.datatype_order.push_back("ls22000-24000");

  ModelTemplateResult tmpl = parse_model_template(R"(
domain car garage
values $price
crole hasPrice(car,$price)=1
)");
  REQUIRE(tmpl.ok());
  GridParseResult grid = parse_grid("param price=22000:26000:500");
  REQUIRE(grid.ok());

  SUBCASE("a constant concept picks the first grid point") {
    MaximizeResult best = maximize_degree(kb, tmpl.model, grid.grid, *make_top(), LogicFamily::Zadeh);
    CHECK(best.best_degree == Degree::one());
    CHECK(best.best_parameters == std::vector<std::pair<std::string, Rat>>{{"price", rat("22000")}});
    CHECK(best.best_element == "car");  // first domain element among ties
    CHECK(best.points_evaluated == 9);
  }

  SUBCASE("a shoulder is maximal on its plateau") {
    ConceptPtr c = make_data_some("hasPrice", DatatypeExpr::named("ls22000-24000"));
    MaximizeResult best = maximize_degree(kb, tmpl.model, grid.grid, *c, LogicFamily::Zadeh);
    CHECK(best.best_degree == Degree::one());
    CHECK(best.best_parameters[0].second == rat("22000"));
    // self-consistency: re-evaluating at the argmax reproduces the degree
    FiniteInterpretation I = tmpl.model.instantiate({{"price", best.best_parameters[0].second}});
    Evaluator ev(kb, I, LogicFamily::Zadeh);
    CHECK(ev.eval_concept(*c, best.best_element) == best.best_degree);
  }

  SUBCASE("empty grids are rejected") {
    GridSpec empty;
    CHECK_THROWS_AS(maximize_degree(kb, tmpl.model, empty, *make_top(), LogicFamily::Zadeh), EvalError);
  }
}
