#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "elmatch/diagnostics.hpp"
#include "elmatch/reasoner.hpp"
#include "support/fixtures.hpp"

using namespace elmatch;
using namespace elmatch::testing;

TEST_CASE("atom hierarchy verdicts on the metrology fixture") {
  Reasoner reasoner(metrology_ontology());
  CHECK(reasoner.subsumes(atom("Steel"), atom("Metal")));
  CHECK(reasoner.subsumes(atom("Steel"), atom("Material")));
  CHECK(reasoner.subsumes(atom("Oak"), atom("Material")));
  CHECK(!reasoner.subsumes(atom("Steel"), atom("Wood")));
  CHECK(!reasoner.subsumes(atom("Metal"), atom("Steel")));
  CHECK(reasoner.strictly_subsumed(atom("Steel"), atom("Metal")));
  CHECK(!reasoner.strictly_subsumed(atom("Steel"), atom("Steel")));
  CHECK(reasoner.equivalent(atom("Steel"), atom("Steel")));
  CHECK(!reasoner.equivalent(atom("Steel"), atom("Metal")));
  CHECK(reasoner.satisfiable(atom("Steel")));
  CHECK(reasoner.consistent());
}

TEST_CASE("complex right-hand sides answer through query names") {
  Reasoner reasoner(metrology_ontology());
  CHECK(reasoner.subsumes(atom("Instrument"), some("hasMat", atom("Material"))));
  CHECK(reasoner.subsumes(atom("Instrument"),
                          conj({some("hasMat", atom("Material")),
                                some("hasIT", atom("IT")), some("hasRM", atom("RM"))})));
  CHECK(!reasoner.subsumes(atom("Instrument"), some("hasMat", atom("Metal"))));
  CHECK(!reasoner.subsumes(some("hasMat", atom("Material")), atom("Instrument")));
}

TEST_CASE("existential fillers lift along the hierarchy") {
  Reasoner reasoner(metrology_ontology());
  CHECK(reasoner.subsumes(some("hasMat", atom("Steel")), some("hasMat", atom("Metal"))));
  CHECK(!reasoner.subsumes(some("hasMat", atom("Metal")), some("hasMat", atom("Steel"))));
  CHECK(!reasoner.subsumes(some("hasMat", atom("Steel")), some("hasIT", atom("Steel"))));
  CHECK(reasoner.subsumes(some("hasMat", atom("Steel")), some("hasMat", ConceptExpr::top())));
  CHECK(reasoner.subsumes(conj({atom("Ruler"), some("hasMat", atom("Oak"))}),
                          conj({atom("IT"), some("hasMat", atom("Wood"))})));
}

TEST_CASE("conjunction queries follow both members") {
  Reasoner reasoner(metrology_ontology());
  ConceptRef steel_and_oak = conj({atom("Steel"), atom("Oak")});
  CHECK(reasoner.subsumes(steel_and_oak, atom("Metal")));
  CHECK(reasoner.subsumes(steel_and_oak, atom("Wood")));
  // nothing in the fixture makes Steel and Oak disjoint
  CHECK(reasoner.satisfiable(steel_and_oak));
}

TEST_CASE("bottom handling") {
  Ontology ontology = parse_ontology_or_throw(
      "sub A Thing\n"
      "sub B Thing\n"
      "sub and(A, B) Bottom\n"
      "sub D Bottom\n");
  ontology.declare_role("r");
  Reasoner reasoner(ontology);
  CHECK(reasoner.satisfiable(atom("A")));
  CHECK(!reasoner.satisfiable(conj({atom("A"), atom("B")})));
  CHECK(!reasoner.satisfiable(atom("D")));
  CHECK(!reasoner.satisfiable(some("r", ConceptExpr::bottom())));
  // unsatisfiable descriptions subsume everything
  CHECK(reasoner.subsumes(conj({atom("A"), atom("B")}), atom("Thing")));
  CHECK(reasoner.subsumes(atom("D"), atom("A")));
  CHECK(!reasoner.subsumes(atom("A"), ConceptExpr::bottom()));
  CHECK(reasoner.subsumes(ConceptExpr::bottom(), atom("A")));
  CHECK(reasoner.consistent());
}

TEST_CASE("an inconsistent ontology entails everything") {
  Ontology ontology = parse_ontology_or_throw(
      "sub Top Bottom\n"
      "sub A Thing\n");
  Reasoner reasoner(ontology);
  CHECK(!reasoner.consistent());
  CHECK(reasoner.subsumes(atom("Thing"), atom("A")));
  CHECK(!reasoner.satisfiable(ConceptExpr::top()));
}

TEST_CASE("nominal merging propagates along role reachability") {
  Ontology ontology = parse_ontology_or_throw(
      "sub A {a}\n"
      "sub B {a}\n"
      "sub A some(r, B)\n"
      "sub C {a}\n");
  Reasoner reasoner(ontology);
  // any A element is the individual a, whose r-successor is again a, so a
  // sits inside B; hence every A element lands in B
  CHECK(reasoner.subsumes(atom("A"), atom("B")));
  // C shares the nominal but nothing witnesses it along any role chain
  CHECK(!reasoner.subsumes(atom("C"), atom("B")));
  CHECK(!reasoner.subsumes(atom("B"), atom("A")));
  CHECK(reasoner.subsumes(atom("A"), ConceptExpr::nominal("a")));
  CHECK(reasoner.subsumes(ConceptExpr::nominal("a"), ConceptExpr::nominal("a")));
}

TEST_CASE("role hierarchy and chains") {
  Ontology ontology = parse_ontology_or_throw(
      "sub X X\n"
      "rsub r s\n"
      "rchain p q -> t\n");
  ontology.declare_role("r");
  ontology.declare_role("s");
  ontology.declare_role("p");
  ontology.declare_role("q");
  ontology.declare_role("t");
  Reasoner reasoner(ontology);
  CHECK(reasoner.subsumes(some("r", atom("X")), some("s", atom("X"))));
  CHECK(!reasoner.subsumes(some("s", atom("X")), some("r", atom("X"))));
  CHECK(reasoner.subsumes(some("p", some("q", atom("X"))), some("t", atom("X"))));
  CHECK(!reasoner.subsumes(some("t", atom("X")), some("p", some("q", atom("X")))));
}

TEST_CASE("named subsumer queries") {
  Reasoner reasoner(metrology_ontology());
  CHECK(reasoner.min_common_named_subsumers({"Steel", "Iron"}) ==
        std::vector<std::string>{"Metal"});
  CHECK(reasoner.min_common_named_subsumers({"Steel", "Oak"}) ==
        std::vector<std::string>{"Material"});
  CHECK(reasoner.min_common_named_subsumers({"Steel"}) ==
        std::vector<std::string>{"Steel"});
  // nothing above unrelated roots except Top, which is never listed
  CHECK(reasoner.min_common_named_subsumers({"Material", "IT"}).empty());

  CHECK(reasoner.named_subsumers("Steel") ==
        std::vector<std::string>{"Material", "Metal", "Steel"});

  CHECK(reasoner.common_named_subsumers(atom("Steel"), atom("Iron")) ==
        std::vector<std::string>{"Metal"});
  CHECK(reasoner.common_named_subsumers(conj({atom("Steel"), atom("Analogic")}),
                                        conj({atom("Iron"), atom("Analogic")})) ==
        std::vector<std::string>{"Analogic", "Metal"});
}

TEST_CASE("unknown symbols are refused") {
  Reasoner reasoner(metrology_ontology());
  CHECK_THROWS_AS(reasoner.subsumes(atom("Nope"), ConceptExpr::top()), Error);
  CHECK_THROWS_AS(reasoner.subsumes(atom("Steel"), some("noRole", atom("Steel"))), Error);
  CHECK_THROWS_AS(reasoner.subsumes(ConceptExpr::nominal("ghost"), atom("Steel")), Error);
  CHECK_THROWS_AS(reasoner.named_subsumers("Nope"), Error);
  CHECK_THROWS_AS(reasoner.min_common_named_subsumers({"Steel", "Nope"}), Error);
  CHECK_THROWS_AS(reasoner.min_common_named_subsumers({}), Error);
  try {
    reasoner.subsumes(atom("Nope"), ConceptExpr::top());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSymbol);
  }
}

TEST_CASE("repeated compound queries stay stable") {
  Reasoner reasoner(metrology_ontology());
  ConceptRef query = conj({atom("Ruler"), some("hasMat", atom("Steel"))});
  ConceptRef target = some("hasMat", atom("Metal"));
  bool first = reasoner.subsumes(query, target);
  for (int i = 0; i < 50; ++i) {
    CHECK(reasoner.subsumes(query, target) == first);
  }
  CHECK(first);
}

TEST_CASE("hierarchy axioms transitively reduce a chain") {
  Ontology ontology = parse_ontology_or_throw(
      "sub A B\n"
      "sub B C\n"
      "sub A C\n");
  Reasoner reasoner(ontology);
  auto axioms = hierarchy_axioms(reasoner);
  std::vector<std::pair<std::string, std::string>> expected = {{"A", "B"}, {"B", "C"}};
  CHECK(axioms == expected);
}

TEST_CASE("hierarchy axioms report equivalences both ways") {
  Ontology ontology = parse_ontology_or_throw(
      "equiv A B\n"
      "sub A C\n");
  Reasoner reasoner(ontology);
  auto axioms = hierarchy_axioms(reasoner);
  std::vector<std::pair<std::string, std::string>> expected = {
      {"B", "A"}, {"A", "B"}, {"A", "C"}};
  CHECK(axioms == expected);
}

TEST_CASE("hierarchy axioms mark unsatisfiable and universal names") {
  Ontology ontology = parse_ontology_or_throw(
      "sub D Bottom\n"
      "sub Top E\n"
      "sub A B\n");
  Reasoner reasoner(ontology);
  auto axioms = hierarchy_axioms(reasoner);
  // D collapses to Bottom, E is entailed from Top, A -> B stays
  CHECK(std::find(axioms.begin(), axioms.end(),
                  std::make_pair(std::string("D"), std::string("Bottom"))) != axioms.end());
  CHECK(std::find(axioms.begin(), axioms.end(),
                  std::make_pair(std::string("Top"), std::string("E"))) != axioms.end());
  CHECK(std::find(axioms.begin(), axioms.end(),
                  std::make_pair(std::string("A"), std::string("B"))) != axioms.end());
  CHECK(axioms.size() == 3);
}
