#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpehr/ehrhart.hh"
#include "qpehr/wqsym.hh"

using namespace qpehr;

namespace {

PackedWord pw(const char* text) { return parsePackedWord(text); }

WordComb wc(std::initializer_list<const char*> words) {
  WordComb out;
  for (const char* w : words) out.add(pw(w), Rat(1));
  return out;
}

}  // namespace

TEST_CASE("packed word basics") {
  CHECK(pack({3, 7, 3}) == pw("(121)"));
  CHECK(pack({5}) == pw("(1)"));
  CHECK(pack({}) == PackedWord());
  CHECK_THROWS_AS(PackedWord({1, 3}), InputError);  // letter 2 missing
  CHECK_THROWS_AS(parsePackedWord("(10)"), InputError);
  CHECK(packedWordText(pw("(122)")) == "(122)");
  CHECK(packedWordText(PackedWord()) == "()");
  CHECK(parsePackedWord("()") == PackedWord());

  // Ordered Bell counts.
  CHECK(allPackedWords(0).size() == 1);
  CHECK(allPackedWords(1).size() == 1);
  CHECK(allPackedWords(2).size() == 3);
  CHECK(allPackedWords(3).size() == 13);
  CHECK(allPackedWords(4).size() == 75);
  CHECK_THROWS_AS(allPackedWords(9), CapacityError);
}

TEST_CASE("shifted quasi-shuffle product") {
  CHECK(productW(pw("(11)"), pw("(11)")) == wc({"(1111)", "(1122)", "(2211)"}));
  CHECK(productW(pw("(11)"), pw("(21)")) ==
        wc({"(1121)", "(1132)", "(2221)", "(2231)", "(3321)"}));
  CHECK(productW(PackedWord(), pw("(12)")) == wc({"(12)"}));
  CHECK(productW(pw("(1)"), PackedWord()) == wc({"(1)"}));
  CHECK(productW(pw("(1)"), pw("(1)")) == wc({"(11)", "(12)", "(21)"}));
}

TEST_CASE("deconcatenation by letter levels") {
  WordTensor d212 = coproductW(pw("(212)"));
  CHECK(d212.size() == 3);
  CHECK(d212.coeff({pw("(212)"), PackedWord()}) == Rat(1));
  CHECK(d212.coeff({pw("(1)"), pw("(11)")}) == Rat(1));
  CHECK(d212.coeff({PackedWord(), pw("(212)")}) == Rat(1));

  WordTensor d312 = coproductW(pw("(312)"));
  CHECK(d312.size() == 4);
  CHECK(d312.coeff({pw("(12)"), pw("(1)")}) == Rat(1));

  CHECK(counitW(wordBasis(PackedWord())) == Rat(1));
  CHECK(counitW(wordBasis(pw("(12)"))) == Rat(0));
}

TEST_CASE("internal coproduct") {
  WordTensor d12 = internalCoproductW(pw("(12)"));
  CHECK(d12.size() == 4);
  CHECK(d12.coeff({pw("(12)"), pw("(11)")}) == Rat(1));
  CHECK(d12.coeff({pw("(12)"), pw("(12)")}) == Rat(1));
  CHECK(d12.coeff({pw("(12)"), pw("(21)")}) == Rat(1));
  CHECK(d12.coeff({pw("(11)"), pw("(12)")}) == Rat(1));

  CHECK(internalCoproductW(pw("(11)")) ==
        WordTensor::basis({pw("(11)"), pw("(11)")}));

  CHECK(counitInternalW(wordBasis(pw("(111)"))) == Rat(1));
  CHECK(counitInternalW(wordBasis(pw("(12)"))) == Rat(0));
}

TEST_CASE("ordinal products") {
  CHECK(ordinalProduct(pw("(1)"), pw("(1)"), OrdinalMode::DOWN) == wc({"(12)"}));
  CHECK(ordinalProduct(pw("(1)"), pw("(1)"), OrdinalMode::STAR) == wc({"(11)"}));
  CHECK(ordinalProduct(pw("(1)"), pw("(1)"), OrdinalMode::LIGHTNING) ==
        wc({"(12)", "(11)"}));
  CHECK(ordinalProduct(pw("(12)"), pw("(11)"), OrdinalMode::DOWN) == wc({"(1233)"}));
  CHECK(ordinalProduct(pw("(12)"), pw("(11)"), OrdinalMode::STAR) == wc({"(1222)"}));
  CHECK(ordinalProduct(PackedWord(), pw("(21)"), OrdinalMode::STAR) == wc({"(21)"}));

  // Stacked posets factor through the ordinal products.
  QuasiPoset p = parseQuasiPoset("1:");
  QuasiPoset q = parseQuasiPoset("2:");
  CHECK(ehrMorphism(productOrdinal(p, q), CountMode::STRICT) ==
        ordinalProduct(ehrMorphism(p, CountMode::STRICT),
                       ehrMorphism(q, CountMode::STRICT), OrdinalMode::DOWN));
  CHECK(ehrMorphism(productOrdinal(p, q), CountMode::WEAK) ==
        ordinalProduct(ehrMorphism(p, CountMode::WEAK),
                       ehrMorphism(q, CountMode::WEAK), OrdinalMode::LIGHTNING));
}

TEST_CASE("word-valued count morphism") {
  CHECK(ehrMorphism(parseQuasiPoset("2: 1<2"), CountMode::WEAK) ==
        wc({"(11)", "(12)"}));
  CHECK(ehrMorphism(parseQuasiPoset("2: 1<2"), CountMode::STRICT) == wc({"(12)"}));
  CHECK(ehrMorphism(parseQuasiPoset("2:"), CountMode::STRICT) ==
        wc({"(11)", "(12)", "(21)"}));
  CHECK(ehrMorphism(parseQuasiPoset("2: 1~2"), CountMode::WEAK) == wc({"(11)"}));
  CHECK(ehrMorphism(QuasiPoset(), CountMode::WEAK) == wordBasis(PackedWord()));
}

TEST_CASE("scaling automorphism") {
  WordComb unit = wordBasis(pw("(12)"));
  CHECK(phiAutomorphism(unit, Rat(-1)) == wc({"(12)", "(11)"}));
  CHECK(phiAutomorphism(wordBasis(pw("(1)")), Rat(-1)) ==
        wordBasis(pw("(1)")) * Rat(-1));
  CHECK(phiAutomorphism(phiAutomorphism(unit, Rat(-1)), Rat(-1)) == unit);
  CHECK(phiAutomorphism(unit, Rat(1)) == unit);

  // Signed duality at the 2-chain.
  QuasiPoset c2 = parseQuasiPoset("2: 1<2");
  WordComb weak = ehrMorphism(c2, CountMode::WEAK);
  WordComb strict = ehrMorphism(c2, CountMode::STRICT);
  CHECK(weak == phiAutomorphism(strict, Rat(-1)));
}

TEST_CASE("polynomial collapse") {
  CHECK(hMorphism(wc({"(12)", "(11)"})) ==
        ehrPolynomial(parseQuasiPoset("2: 1<2"), CountMode::WEAK));
  CHECK(hMorphism(wordBasis(PackedWord())) == Polynomial::constant(Rat(1)));
  CHECK(hMorphism(wordBasis(pw("(212)"))) == hilbert(2));
}

TEST_CASE("word order and the word-to-poset map") {
  CHECK(wordLeq(pw("(122)"), pw("(123)")));
  CHECK_FALSE(wordLeq(pw("(123)"), pw("(122)")));
  CHECK(wordLeq(pw("(11)"), pw("(21)")));
  CHECK(wordLeq(pw("(121)"), pw("(121)")));
  CHECK_THROWS_AS(wordLeq(pw("(1)"), pw("(12)")), InputError);

  CHECK(posetFromWord(pw("(122)")) == parseQuasiPoset("3: 1<2 1<3"));
  CHECK(posetFromWord(pw("(11)")) == parseQuasiPoset("2:"));
  CHECK(posetFromWord(pw("(12)")) == parseQuasiPoset("2: 1<2"));
  CHECK(posetFromWord(PackedWord()) == QuasiPoset());

  // Strict image of the induced order is the up-set of the word.
  for (const PackedWord& w : allPackedWords(3)) {
    WordComb image = ehrMorphism(posetFromWord(w), CountMode::STRICT);
    WordComb want;
    for (const PackedWord& w2 : allPackedWords(3))
      if (wordLeq(w, w2)) want.add(w2, Rat(1));
    CHECK(image == want);
  }
}
