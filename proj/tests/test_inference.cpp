#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "elmatch/diagnostics.hpp"
#include "elmatch/inference.hpp"
#include "elmatch/reasoner.hpp"
#include "support/fixtures.hpp"

using namespace elmatch;
using namespace elmatch::testing;

TEST_CASE("simple description classification") {
  CHECK(is_simple_description(ConceptExpr::top()));
  CHECK(is_simple_description(atom("A")));
  CHECK(is_simple_description(some("r", conj({atom("A"), some("s", atom("B"))}))));
  CHECK(!is_simple_description(ConceptExpr::bottom()));
  CHECK(!is_simple_description(ConceptExpr::nominal("a")));
  CHECK(!is_simple_description(conj({atom("A"), some("r", ConceptExpr::bottom())})));

  CHECK_NOTHROW(ensure_simple(atom("A")));
  CHECK_THROWS_AS(ensure_simple(ConceptExpr::bottom()), Error);
  try {
    ensure_simple(some("r", ConceptExpr::nominal("a")));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NominalUnsupported);
  }
  try {
    ensure_simple(ConceptExpr::bottom());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimpleDescription);
  }
}

TEST_CASE("reduce drops entailed conjuncts") {
  Reasoner reasoner(metrology_ontology());
  CHECK(render(reduce(conj({atom("Steel"), atom("Metal")}), reasoner)) == "Steel");
  CHECK(render(reduce(conj({atom("Steel"), atom("Material"), atom("Metal")}), reasoner)) ==
        "Steel");
  CHECK(render(reduce(atom("Steel"), reasoner)) == "Steel");
  CHECK(render(reduce(ConceptExpr::top(), reasoner)) == "Top");
  // unrelated conjuncts both survive
  CHECK(render(reduce(conj({atom("Steel"), atom("Analogic")}), reasoner)) ==
        "and(Analogic, Steel)");
}

TEST_CASE("reduce reaches into existential fillers") {
  Reasoner reasoner(metrology_ontology());
  CHECK(render(reduce(some("hasMat", conj({atom("Steel"), atom("Metal")})), reasoner)) ==
        "some(hasMat, Steel)");
  CHECK(render(reduce(conj({some("hasMat", atom("Steel")), some("hasMat", atom("Metal"))}),
                      reasoner)) == "some(hasMat, Steel)");
  // same role, incomparable fillers: neither conjunct is redundant
  CHECK(render(reduce(conj({some("hasMat", atom("Steel")), some("hasMat", atom("Oak"))}),
                      reasoner)) == "and(some(hasMat, Oak), some(hasMat, Steel))");
}

TEST_CASE("reduce keeps the smallest rendering among equivalent conjuncts") {
  Ontology ontology = parse_ontology_or_throw("equiv Alloy Blend\n");
  Reasoner reasoner(ontology);
  CHECK(render(reduce(conj({atom("Blend"), atom("Alloy")}), reasoner)) == "Alloy");
}

TEST_CASE("reduce is idempotent and meaning preserving on the fixture") {
  Reasoner reasoner(metrology_ontology());
  ConceptRef dense = conj({atom("Steel"), atom("Metal"),
                           some("hasMat", conj({atom("Oak"), atom("Wood")})),
                           some("hasMat", ConceptExpr::top())});
  ConceptRef once = reduce(dense, reasoner);
  CHECK(render(once) == render(reduce(once, reasoner)));
  CHECK(reasoner.equivalent(once, dense));
}

TEST_CASE("least common subsumer matches the worked metrology values") {
  Reasoner reasoner(metrology_ontology());
  ConceptRef steel_analogic = conj({atom("Steel"), atom("Analogic")});
  ConceptRef iron_numeric = conj({atom("Iron"), atom("Numeric")});
  ConceptRef oak = atom("Oak");

  CHECK(reasoner.equivalent(lcs(steel_analogic, iron_numeric, reasoner),
                            conj({atom("Metal"), atom("RM")})));
  CHECK(reasoner.equivalent(lcs(steel_analogic, oak, reasoner), atom("Material")));
  CHECK(reasoner.equivalent(lcs(iron_numeric, oak, reasoner), atom("Material")));
}

TEST_CASE("least common subsumer pairs existentials per role") {
  Reasoner reasoner(metrology_ontology());
  ConceptRef left = conj({some("hasMat", atom("Steel")), some("hasIT", atom("Ruler"))});
  ConceptRef right = conj({some("hasMat", atom("Oak")), some("hasIT", atom("Calliper"))});
  CHECK(render(lcs(left, right, reasoner)) ==
        "and(some(hasIT, IT), some(hasMat, Material))");

  // roles with no counterpart on the other side contribute nothing
  ConceptRef only_left = some("hasRM", atom("Analogic"));
  CHECK(render(lcs(only_left, some("hasMat", atom("Steel")), reasoner)) == "Top");

  // a Top filler absorbs the pairing for that role
  CHECK(render(lcs(some("hasMat", atom("Steel")), some("hasMat", ConceptExpr::top()),
                   reasoner)) == "some(hasMat, Top)");
}

TEST_CASE("least common subsumer trivial and unsatisfiable arguments") {
  Ontology ontology = parse_ontology_or_throw(
      "sub A Thing\n"
      "sub B Thing\n"
      "sub C Thing\n"
      "sub and(A, B) Bottom\n");
  Reasoner reasoner(ontology);
  ConceptRef broken = conj({atom("A"), atom("B")});
  CHECK(render(lcs(broken, atom("C"), reasoner)) == "C");
  CHECK(render(lcs(atom("C"), broken, reasoner)) == "C");
  CHECK(render(lcs(broken, broken, reasoner)) == "Top");
  CHECK(render(lcs(atom("C"), ConceptExpr::top(), reasoner)) == "Top");

  Reasoner metrology(metrology_ontology());
  CHECK_THROWS_AS(lcs(ConceptExpr::bottom(), atom("Steel"), metrology), Error);
  CHECK_THROWS_AS(lcs(ConceptExpr::nominal("x"), atom("Steel"), metrology), Error);
}

TEST_CASE("semantic difference matches the worked metrology values") {
  Reasoner reasoner(metrology_ontology());
  ConceptRef steel_analogic = conj({atom("Steel"), atom("Analogic")});
  ConceptRef metal_rm = conj({atom("Metal"), atom("RM")});
  CHECK(render(semantic_difference(steel_analogic, metal_rm, reasoner)) ==
        "and(Analogic, Steel)");
  CHECK(render(semantic_difference(steel_analogic, atom("Metal"), reasoner)) ==
        "and(Analogic, Steel)");
  // conjuncts the subtrahend already entails drop out
  CHECK(render(semantic_difference(conj({atom("Steel"), atom("Analogic")}),
                                   conj({atom("Steel"), atom("RM")}), reasoner)) ==
        "Analogic");
  CHECK(render(semantic_difference(atom("Steel"), atom("Material"), reasoner)) == "Steel");
  CHECK(render(semantic_difference(steel_analogic, steel_analogic, reasoner)) == "Top");
  CHECK(render(semantic_difference(atom("Steel"), ConceptExpr::top(), reasoner)) == "Steel");
}

TEST_CASE("semantic difference keeps whole conjuncts only") {
  Reasoner reasoner(metrology_ontology());
  ConceptRef c = conj({some("hasMat", atom("Steel")), some("hasIT", atom("Ruler"))});
  // the hasIT conjunct is covered exactly, so only the hasMat part remains
  CHECK(render(semantic_difference(c, some("hasIT", atom("Ruler")), reasoner)) ==
        "some(hasMat, Steel)");
  // a weaker cover does not license dropping the conjunct: removing Ruler
  // would leave only IT behind and break the reconstruction identity
  CHECK(render(semantic_difference(c, some("hasIT", atom("IT")), reasoner)) ==
        "and(some(hasIT, Ruler), some(hasMat, Steel))");
}

TEST_CASE("semantic difference requires the precondition") {
  Reasoner reasoner(metrology_ontology());
  CHECK_THROWS_AS(semantic_difference(atom("Metal"), atom("Steel"), reasoner), Error);
  try {
    semantic_difference(atom("Metal"), atom("Steel"), reasoner);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
  CHECK_THROWS_AS(semantic_difference(atom("Steel"), atom("Analogic"), reasoner), Error);
}

TEST_CASE("rest and miss match the worked metrology values") {
  Reasoner reasoner(metrology_ontology());
  ConceptRef demand = conj({atom("Steel"), atom("Analogic")});
  ConceptRef offer = conj({atom("Metal"), atom("Numeric")});
  CHECK(reasoner.equivalent(rest(demand, offer, reasoner),
                            conj({atom("Steel"), atom("Analogic")})));
  CHECK(reasoner.equivalent(miss(demand, offer, reasoner), atom("Numeric")));
}

TEST_CASE("rest and miss degenerate cases") {
  Reasoner reasoner(metrology_ontology());
  // offer refines the demand: nothing is left over on the demand side
  CHECK(render(rest(atom("Metal"), atom("Steel"), reasoner)) == "Top");
  CHECK(render(miss(atom("Metal"), atom("Steel"), reasoner)) == "Steel");
  // offer is weaker: the demand side keeps its specifics
  CHECK(render(rest(atom("Steel"), atom("Metal"), reasoner)) == "Steel");
  CHECK(render(miss(atom("Steel"), atom("Metal"), reasoner)) == "Top");
  CHECK(render(rest(atom("Steel"), atom("Steel"), reasoner)) == "Top");
  CHECK(render(miss(atom("Steel"), atom("Steel"), reasoner)) == "Top");
}

TEST_CASE("one-shot ontology overloads agree with the reasoner versions") {
  Ontology ontology = metrology_ontology();
  Reasoner reasoner(ontology);
  ConceptRef c = conj({atom("Steel"), atom("Analogic")});
  ConceptRef d = conj({atom("Iron"), atom("Numeric")});
  CHECK(render(lcs(c, d, ontology)) == render(lcs(c, d, reasoner)));
  CHECK(render(reduce(conj({atom("Steel"), atom("Metal")}), ontology)) == "Steel");
  CHECK(render(semantic_difference(c, atom("Metal"), ontology)) ==
        render(semantic_difference(c, atom("Metal"), reasoner)));
  CHECK(render(rest(c, d, ontology)) == render(rest(c, d, reasoner)));
  CHECK(render(miss(c, d, ontology)) == render(miss(c, d, reasoner)));
}
