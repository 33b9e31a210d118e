#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qpehr/enumerate.hh"
#include "qpehr/quasiposet.hh"

using namespace qpehr;

namespace {

std::vector<QuasiPoset> allUpTo(int bound) {
  std::vector<QuasiPoset> out;
  for (int n = 0; n <= bound; ++n)
    for (const QuasiPoset& p : enumerateLabeled(n, false)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("parse and text round-trip") {
  QuasiPoset c2 = parseQuasiPoset("2: 1<2");
  CHECK(c2.n() == 2);
  CHECK(c2.leq(1, 2));
  CHECK_FALSE(c2.leq(2, 1));
  CHECK(c2.strictlyLess(1, 2));

  QuasiPoset glued = parseQuasiPoset("2: 1~2");
  CHECK(glued.equiv(1, 2));
  CHECK(glued == fromGenerators(2, {{1, 2, GenKind::LE}, {2, 1, GenKind::LE}}));

  // Closure through mixed generators.
  QuasiPoset mixed = fromGenerators(3, {{1, 2, GenKind::EQUIV}, {2, 3, GenKind::LE}});
  CHECK(mixed.leq(1, 3));
  CHECK(mixed.leq(2, 3));
  CHECK_FALSE(mixed.leq(3, 1));

  for (const QuasiPoset& p : allUpTo(3))
    CHECK(parseQuasiPoset(quasiPosetText(p)) == p);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parseQuasiPoset(""), InputError);
  CHECK_THROWS_AS(parseQuasiPoset("2: 1<3"), InputError);
  CHECK_THROWS_AS(parseQuasiPoset("2: 0<1"), InputError);
  CHECK_THROWS_AS(parseQuasiPoset("2: 1<"), InputError);
  CHECK_THROWS_AS(parseQuasiPoset("x: 1<2"), InputError);
  CHECK_THROWS_AS(parseQuasiPoset("40:"), CapacityError);
  CHECK_THROWS_AS(QuasiPoset(2, {0b01u, 0b00u}), InputError);  // missing reflexive bit
  CHECK_THROWS_AS(QuasiPoset(3, {0b011u, 0b110u, 0b100u}), InputError);  // not transitive
}

TEST_CASE("open sets are the up-closed subsets") {
  QuasiPoset c2 = parseQuasiPoset("2: 1<2");
  CHECK(openSets(c2) == std::vector<uint32_t>({0b00u, 0b10u, 0b11u}));
  CHECK(openSets(parseQuasiPoset("2:")).size() == 4);
  CHECK(openSets(parseQuasiPoset("2: 1~2")) == std::vector<uint32_t>({0b00u, 0b11u}));

  for (const QuasiPoset& p : allUpTo(4)) {
    for (uint32_t open : openSets(p))
      for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.n(); ++j)
          if (((open >> (i - 1)) & 1u) && p.leq(i, j)) CHECK(((open >> (j - 1)) & 1u));
  }
}

TEST_CASE("set partitions count Bell numbers") {
  CHECK(allSetPartitions(0).size() == 1);
  CHECK(allSetPartitions(1).size() == 1);
  CHECK(allSetPartitions(2).size() == 2);
  CHECK(allSetPartitions(3).size() == 5);
  CHECK(allSetPartitions(4).size() == 15);
  for (const Equivalence& eq : allSetPartitions(3)) {
    int seen = 0;
    for (const auto& block : eq.blocks) seen += static_cast<int>(block.size());
    CHECK(seen == 3);
  }
}

TEST_CASE("quotient collapses equivalent vertices") {
  QuasiPoset glued = parseQuasiPoset("3: 1~2 2<3");
  QuotientView q = quotient(glued);
  CHECK(q.cl == 2);
  CHECK(q.cc == 1);
  CHECK(q.classes[0] == std::vector<int>({1, 2}));
  CHECK(q.leqClass(0, 1));
  CHECK_FALSE(q.leqClass(1, 0));

  CHECK(quotient(parseQuasiPoset("2: 1~2")).cl == 1);
  CHECK(quotient(parseQuasiPoset("4:")).cc == 4);
}

TEST_CASE("discreteness means no strict pair") {
  CHECK(parseQuasiPoset("2: 1~2").isDiscrete());
  CHECK(parseQuasiPoset("3:").isDiscrete());
  CHECK_FALSE(parseQuasiPoset("2: 1<2").isDiscrete());
  for (const QuasiPoset& p : allUpTo(4)) CHECK(p.isDiscrete() == !hasStrictPair(p));
}

TEST_CASE("restriction standardizes labels") {
  QuasiPoset v = parseQuasiPoset("3: 1<2 1<3");
  CHECK(restrict(v, 0b110u) == parseQuasiPoset("2:"));
  CHECK(restrict(v, 0b011u) == parseQuasiPoset("2: 1<2"));
  CHECK(restrict(v, 0b101u) == parseQuasiPoset("2: 1<2"));
  CHECK(restrict(v, 0u) == QuasiPoset());
  for (const QuasiPoset& p : allUpTo(3))
    CHECK(restrict(p, p.n() == 0 ? 0u : ((1u << p.n()) - 1)) == p);
}

TEST_CASE("products and opposite") {
  QuasiPoset pt = parseQuasiPoset("1:");
  CHECK(productOrdinal(pt, pt) == parseQuasiPoset("2: 1<2"));
  CHECK(productDisjoint(pt, pt) == parseQuasiPoset("2:"));
  CHECK(productDisjoint(parseQuasiPoset("2: 1<2"), pt) == parseQuasiPoset("3: 1<2"));
  CHECK(opposite(parseQuasiPoset("2: 1<2")) == parseQuasiPoset("2: 2<1"));
  for (const QuasiPoset& p : allUpTo(3)) {
    CHECK(opposite(opposite(p)) == p);
    CHECK(productDisjoint(p, QuasiPoset()) == p);
    CHECK(productOrdinal(QuasiPoset(), p) == p);
  }
}

TEST_CASE("connected components split the vertex set") {
  QuasiPoset two = parseQuasiPoset("3: 1<2");
  auto comps = connectedComponents(two);
  CHECK(comps.size() == 2);
  QuasiPoset n4 = parseQuasiPoset("4: 1<3 2<3 2<4");
  CHECK(connectedComponents(n4).size() == 1);
  for (const QuasiPoset& p : allUpTo(4)) {
    uint32_t seen = 0;
    for (const std::vector<int>& comp : connectedComponents(p)) {
      uint32_t mask = 0;
      for (int v : comp) mask |= 1u << (v - 1);
      CHECK((seen & mask) == 0u);
      seen |= mask;
    }
    CHECK(seen == (p.n() == 0 ? 0u : (1u << p.n()) - 1));
  }
}

TEST_CASE("canonical form is a relabeling invariant") {
  // Two labelings of the same shape share a key; different shapes never do.
  CHECK(canonicalKey(parseQuasiPoset("3: 1<2 1<3")) ==
        canonicalKey(parseQuasiPoset("3: 2<1 2<3")));
  CHECK(canonicalKey(parseQuasiPoset("3: 1<2 1<3")) !=
        canonicalKey(parseQuasiPoset("3: 1<3 2<3")));

  for (const QuasiPoset& p : allUpTo(3)) {
    CanonicalForm cf = canonicalForm(p);
    CHECK(canonicalKey(cf.representative) == cf.key);
    CHECK(decodeKey(cf.key) == cf.representative);
    CHECK(keyFromHex(keyHex(cf.key)) == cf.key);
  }

  // Iso-class representatives are pairwise distinct and stable under decode.
  std::set<CanonicalKey> keys;
  for (const QuasiPoset& p : enumerateIsoReps(3, false)) keys.insert(canonicalKey(p));
  CHECK(keys.size() == 9);
}

TEST_CASE("compatible equivalences demand connected closed blocks") {
  CHECK(compatibleEquivalences(parseQuasiPoset("2: 1<2")).size() == 2);
  CHECK(compatibleEquivalences(parseQuasiPoset("3: 1<2 2<3")).size() == 4);
  CHECK(compatibleEquivalences(parseQuasiPoset("2:")).size() == 1);
  CHECK(compatibleEquivalences(parseQuasiPoset("2: 1~2")).size() == 1);
  CHECK(compatibleEquivalences(parseQuasiPoset("3: 1<2 1<3")).size() == 4);

  // {1,3} is a disconnected block of the 3-chain: not compatible.
  Equivalence bad;
  bad.blocks = {{1, 3}, {2}};
  CHECK_FALSE(isCompatible(parseQuasiPoset("3: 1<2 2<3"), bad));
}

TEST_CASE("contraction and within-block restriction") {
  QuasiPoset c3 = parseQuasiPoset("3: 1<2 2<3");
  Equivalence low;
  low.blocks = {{1, 2}, {3}};
  QuasiPoset contracted = contract(c3, low);
  CHECK(contracted.equiv(1, 2));
  CHECK(contracted.strictlyLess(1, 3));
  CHECK(contracted.strictlyLess(2, 3));
  QuasiPoset inside = restrictByEq(c3, low);
  CHECK(inside.leq(1, 2));
  CHECK_FALSE(inside.leq(2, 3));
  CHECK_FALSE(inside.leq(1, 3));

  // Contracting the discrete partition is the identity.
  for (const QuasiPoset& p : allUpTo(3)) {
    Equivalence fine;
    for (int v = 1; v <= p.n(); ++v) fine.blocks.push_back({v});
    CHECK(contract(p, fine) == p);
    CHECK(restrictByEq(p, fine) ==
          (p.n() == 0 ? p : fromGenerators(p.n(), {})));
  }
}
