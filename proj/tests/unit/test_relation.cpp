#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "invord/json_io.hpp"
#include "invord/relation.hpp"

using namespace invord;

namespace {

Relation rel(int n, std::vector<std::pair<int, int>> pairs, bool reflexive = true) {
  return Relation::fromPairs(Universe(n), pairs, reflexive);
}

} // namespace

TEST_CASE("classify: equality is an equivalence and a partial order") {
  RelationClass c = classify(Relation::equality(Universe(3)));
  CHECK(c.isEquivalence());
  CHECK(c.isPartialOrder());
  CHECK(!c.total);
  auto kinds = c.kinds();
  CHECK(std::find(kinds.begin(), kinds.end(), "equivalence") != kinds.end());
  CHECK(std::find(kinds.begin(), kinds.end(), "partial-order") != kinds.end());
}

TEST_CASE("classify: missing composite pair breaks transitivity") {
  RelationClass c = classify(rel(3, {{0, 1}, {1, 2}}));
  CHECK(c.reflexive);
  CHECK(!c.transitive);
}

TEST_CASE("classify: a two-cycle is a linear preorder but not antisymmetric") {
  RelationClass c = classify(rel(2, {{0, 1}, {1, 0}}));
  CHECK(c.isLinearPreorder());
  CHECK(!c.antisymmetric);
}

TEST_CASE("transitiveClosure adds composite pairs") {
  Relation r = transitiveClosure(rel(3, {{0, 1}, {1, 2}}));
  CHECK(r.at(0, 2));
  CHECK(r == rel(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("transitiveClosure fixes transitive relations") {
  Relation r = rel(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(transitiveClosure(r) == r);
}

TEST_CASE("transitiveClosure of a bare two-cycle adds the loops") {
  Relation r = Relation::fromPairs(Universe(2), {{0, 1}, {1, 0}}, false);
  Relation c = transitiveClosure(r);
  CHECK(c.at(0, 0));
  CHECK(c.at(1, 1));
  CHECK((c.at(0, 1) && c.at(1, 0)));
}

TEST_CASE("transitiveClosure is extensive, idempotent and monotone") {
  testgen::Rng rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    int n = testgen::pick(rng, 1, 8);
    Relation r = testgen::randomRelation(rng, n);
    Relation c = transitiveClosure(r);
    CHECK(extends(r, c));
    CHECK(transitiveClosure(c) == c);
    Relation s = unite(r, testgen::randomRelation(rng, n, 10));
    CHECK(extends(c, transitiveClosure(s)));
  }
}

TEST_CASE("strictPart drops mutual pairs and the diagonal") {
  Relation lin = rel(3, {{0, 1}, {0, 2}, {1, 2}});
  Relation s = strictPart(lin);
  CHECK(s == Relation::fromPairs(Universe(3), {{0, 1}, {0, 2}, {1, 2}}, false));

  CHECK(strictPart(rel(2, {{0, 1}, {1, 0}})).pairCount() == 0);
  CHECK(strictPart(Relation::equality(Universe(3))).pairCount() == 0);
}

TEST_CASE("isInvariant: equality under any action") {
  PermAction swap = generateGroup(Universe(2), {{"g", Permutation({1, 0})}});
  CHECK(isInvariant(Relation::equality(Universe(2)), swap).invariant);
}

TEST_CASE("isInvariant: 0<1 under the swap, with witness") {
  PermAction swap = generateGroup(Universe(2), {{"g", Permutation({1, 0})}});
  InvarianceResult res = isInvariant(rel(2, {{0, 1}}), swap);
  CHECK(!res.invariant);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->generator == 0);
  CHECK(res.witness->x == 0);
  CHECK(res.witness->y == 1);
}

TEST_CASE("isInvariant: orbit-closed pairs under (0 1)(2 3)") {
  PermAction a = generateGroup(Universe(4), {{"g", Permutation({1, 0, 3, 2})}});
  CHECK(isInvariant(rel(4, {{0, 2}, {1, 3}}), a).invariant);
}

TEST_CASE("isInvariant over generators agrees with all elements") {
  testgen::Rng rng(911);
  for (int trial = 0; trial < 150; ++trial) {
    int n = testgen::pick(rng, 1, 6);
    PermAction a = testgen::randomAbelianAction(rng, n, 12);
    Relation r = testgen::pick(rng, 0, 1) ? testgen::randomRelation(rng, n)
                                          : testgen::randomInvariantPreorder(rng, a);
    CHECK(isInvariant(r, a).invariant == isInvariantAllElements(r, a).invariant);
  }
}

TEST_CASE("topoLinearExtension breaks ties by smallest index") {
  CHECK(topoLinearExtension(Relation::equality(Universe(3))) ==
        rel(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(topoLinearExtension(rel(3, {{1, 0}})) == rel(3, {{1, 0}, {1, 2}, {0, 2}}));
  Relation lin = rel(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(topoLinearExtension(lin) == lin);
}

TEST_CASE("topoLinearExtension rejects non-partial-orders") {
  CHECK_THROWS_AS(topoLinearExtension(rel(2, {{0, 1}, {1, 0}})), Error);
  CHECK_THROWS_AS(topoLinearExtension(Relation::fromPairs(Universe(2), {{0, 1}}, false)),
                  Error);
}

TEST_CASE("topoLinearExtension yields a linear extension") {
  testgen::Rng rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    int n = testgen::pick(rng, 1, 7);
    PermAction a = trivialAction(Universe(n));
    Relation r = testgen::randomInvariantPartialOrder(rng, a);
    Relation lin = topoLinearExtension(r);
    CHECK(classify(lin).isLinearOrder());
    CHECK(extends(r, lin));
  }
}

TEST_CASE("enumerateLinearExtensions counts") {
  CHECK(allLinearExtensions(Relation::equality(Universe(2))).size() == 2);
  CHECK(allLinearExtensions(rel(3, {{0, 1}})).size() == 3);
  PermAction swap = generateGroup(Universe(2), {{"g", Permutation({1, 0})}});
  CHECK(allLinearExtensions(Relation::equality(Universe(2)), &swap).empty());
}

TEST_CASE("enumerateLinearExtensions equals the permutation filter") {
  testgen::Rng rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = testgen::pick(rng, 1, 5);
    PermAction a = trivialAction(Universe(n));
    Relation r = testgen::randomInvariantPartialOrder(rng, a);
    auto exts = allLinearExtensions(r);
    // count permutations of the universe that sort r
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    std::vector<int> pos(n);
    do {
      for (int i = 0; i < n; ++i) pos[perm[i]] = i;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (r.at(i, j) && pos[i] > pos[j]) ok = false;
      if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(static_cast<int>(exts.size()) == count);
    // emitted once each
    for (size_t i = 0; i < exts.size(); ++i)
      for (size_t j = i + 1; j < exts.size(); ++j) CHECK(!(exts[i] == exts[j]));
  }
}

TEST_CASE("enumerateLinearExtensions enforces the cap") {
  CHECK_THROWS_AS(allLinearExtensions(Relation::equality(Universe(8))), Error);
}

TEST_CASE("hasseEdges drops covered pairs") {
  // diamond: 0 < 1 < 3, 0 < 2 < 3
  Relation r = transitiveClosure(rel(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  Relation h = hasseEdges(r);
  CHECK(h == Relation::fromPairs(Universe(4), {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, false));
}

TEST_CASE("hasseDot renders the diamond deterministically") {
  Relation r = transitiveClosure(rel(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  std::string dot = hasseDot(r);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("n0 -> n3") == std::string::npos);
  CHECK(dot == hasseDot(r));
  CHECK_THROWS_AS(hasseDot(rel(2, {{0, 1}, {1, 0}})), Error);
}

TEST_CASE("condense groups mutual pairs") {
  Relation pre = transitiveClosure(rel(3, {{0, 1}, {1, 0}}));
  Condensation c = condense(pre);
  REQUIRE(c.classes.size() == 2);
  CHECK(c.classes[0] == std::vector<int>{0, 1});
  CHECK(c.representative[1] == 0);
  Relation q = condensedOrder(pre, c);
  CHECK(q == Relation::equality(q.universe()));
}

TEST_CASE("relation JSON round-trips") {
  Relation r = rel(4, {{0, 2}, {1, 3}});
  Relation back = parseRelation(relationToJson(r));
  CHECK(back == r);
  CHECK(relationToJson(back) == relationToJson(r));

  testgen::Rng rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    Relation rr = testgen::randomRelation(rng, testgen::pick(rng, 1, 10));
    CHECK(parseRelation(relationToJson(rr)) == rr);
  }
}

TEST_CASE("relation JSON honors reflexiveClose and validates input") {
  Relation r = parseRelation(R"({"n": 2, "pairs": [[0, 1]], "reflexiveClose": true})");
  CHECK(r == rel(2, {{0, 1}}));
  CHECK_THROWS_AS(parseRelation(R"({"n": 0, "pairs": []})"), Error);
  CHECK_THROWS_AS(parseRelation(R"({"n": 2, "pairs": [[0, 2]]})"), Error);
  CHECK_THROWS_AS(parseRelation(R"({"n": 2, "labels": ["a", "a"], "pairs": []})"), Error);
  CHECK_THROWS_AS(parseRelation(R"({"n": 17, "pairs": []})"), Error); // direct cap
  CHECK_THROWS_AS(parseRelation("not json"), Error);
}

TEST_CASE("custom labels survive the round trip") {
  Relation r = Relation::fromPairs(Universe(2, {"a", "b"}), {{0, 1}}, true);
  std::string js = relationToJson(r);
  CHECK(js.find("\"labels\"") != std::string::npos);
  CHECK(parseRelation(js) == r);
}
