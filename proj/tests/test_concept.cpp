#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "elmatch/concept.hpp"
#include "elmatch/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace elmatch;
using namespace elmatch::testing;

TEST_CASE("constructors expose their parts") {
  ConceptRef a = atom("A");
  CHECK(a->kind() == ConceptKind::Atom);
  CHECK(a->name() == "A");

  ConceptRef n = ConceptExpr::nominal("bob");
  CHECK(n->kind() == ConceptKind::Nominal);
  CHECK(n->name() == "bob");

  ConceptRef e = some("r", a);
  CHECK(e->kind() == ConceptKind::Some);
  CHECK(e->role() == "r");
  CHECK(equal(e->filler(), a));

  CHECK(ConceptExpr::top()->is_top());
  CHECK(ConceptExpr::bottom()->is_bottom());
}

TEST_CASE("conj flattens sorts and deduplicates") {
  ConceptRef a = atom("A");
  ConceptRef b = atom("B");
  ConceptRef c = conj({b, a, b});
  REQUIRE(c->kind() == ConceptKind::And);
  REQUIRE(c->members().size() == 2);
  CHECK(render(c->members()[0]) == "A");
  CHECK(render(c->members()[1]) == "B");
}

TEST_CASE("conj identity cases") {
  ConceptRef a = atom("A");
  CHECK(conj({})->is_top());
  CHECK(render(conj({a})) == "A");
  CHECK(conj({a, ConceptExpr::top()})->kind() == ConceptKind::Atom);
  CHECK(conj({a, ConceptExpr::bottom()})->is_bottom());
}

TEST_CASE("canonicalize flattens nested conjunctions") {
  ConceptRef raw = ConceptExpr::raw_conj(
      {atom("B"), ConceptExpr::raw_conj({atom("A"), atom("B")}), ConceptExpr::top()});
  ConceptRef canon = canonicalize(raw);
  CHECK(render(canon) == "and(A, B)");
}

TEST_CASE("canonicalize reaches into fillers") {
  ConceptRef raw = some("r", ConceptExpr::raw_conj({atom("B"), atom("A"), atom("A")}));
  CHECK(render(canonicalize(raw)) == "some(r, and(A, B))");
}

TEST_CASE("canonicalize collapses bottom members") {
  ConceptRef raw = ConceptExpr::raw_conj({atom("A"), some("r", ConceptExpr::bottom())});
  ConceptRef canon = canonicalize(raw);
  REQUIRE(canon->kind() == ConceptKind::And);
  CHECK(render(canon) == "and(A, some(r, Bottom))");

  ConceptRef direct = ConceptExpr::raw_conj({atom("A"), ConceptExpr::bottom()});
  CHECK(canonicalize(direct)->is_bottom());
}

TEST_CASE("canonicalize is idempotent on random trees") {
  std::mt19937 rng(4101);
  std::vector<std::string> names = concept_pool(5);
  std::vector<std::string> roles = {"r", "s"};
  for (int i = 0; i < 200; ++i) {
    ConceptRef expr = random_description(rng, names, roles, 3);
    ConceptRef once = canonicalize(expr);
    CHECK(equal(once, canonicalize(once)));
  }
}

TEST_CASE("render is injective across distinct canonical forms") {
  std::mt19937 rng(4102);
  std::vector<std::string> names = concept_pool(5);
  std::vector<std::string> roles = {"r", "s"};
  for (int i = 0; i < 200; ++i) {
    ConceptRef a = canonicalize(random_description(rng, names, roles, 2));
    ConceptRef b = canonicalize(random_description(rng, names, roles, 2));
    CHECK((render(a) == render(b)) == equal(a, b));
  }
}

TEST_CASE("render text forms") {
  CHECK(render(ConceptExpr::top()) == "Top");
  CHECK(render(ConceptExpr::bottom()) == "Bottom");
  CHECK(render(atom("Steel")) == "Steel");
  CHECK(render(ConceptExpr::nominal("unit7")) == "{unit7}");
  CHECK(render(some("hasMat", atom("Steel"))) == "some(hasMat, Steel)");
  CHECK(render(conj({some("r", atom("B")), atom("A")})) == "and(A, some(r, B))");
}

TEST_CASE("syntactic length counts atom and nominal occurrences") {
  CHECK(syntactic_length(ConceptExpr::top()) == 0);
  CHECK(syntactic_length(ConceptExpr::bottom()) == 0);
  CHECK(syntactic_length(atom("A")) == 1);
  CHECK(syntactic_length(ConceptExpr::nominal("b")) == 1);
  CHECK(syntactic_length(some("r", ConceptExpr::top())) == 0);
  CHECK(syntactic_length(conj({atom("A"), some("r", conj({atom("A"), atom("B")}))})) == 3);
}

TEST_CASE("top_level_conjuncts splits only the outermost conjunction") {
  ConceptRef expr = conj({atom("A"), some("r", conj({atom("B"), atom("C")}))});
  auto parts = top_level_conjuncts(expr);
  REQUIRE(parts.size() == 2);
  CHECK(render(parts[0]) == "A");
  CHECK(parts[1]->kind() == ConceptKind::Some);

  auto single = top_level_conjuncts(atom("A"));
  REQUIRE(single.size() == 1);
  CHECK(render(single[0]) == "A");

  CHECK(top_level_conjuncts(ConceptExpr::top()).empty());
}

TEST_CASE("structural equality ignores pointer identity") {
  ConceptRef left = conj({atom("A"), some("r", atom("B"))});
  ConceptRef right = conj({some("r", atom("B")), atom("A")});
  CHECK(equal(left, right));
  CHECK(!equal(left, conj({atom("A"), some("s", atom("B"))})));
}

TEST_CASE("rendered text parses back to the same canonical tree") {
  std::mt19937 rng(4103);
  std::vector<std::string> names = concept_pool(5);
  std::vector<std::string> roles = {"r", "s"};
  for (int i = 0; i < 200; ++i) {
    ConceptRef expr = canonicalize(random_description(rng, names, roles, 2));
    ConceptRef reparsed = parse_concept_or_throw(render(expr));
    CHECK(equal(expr, canonicalize(reparsed)));
  }
}
