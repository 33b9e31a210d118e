// Acceptance gate: ten end-to-end checks, each with a wall-clock budget.
// Prints exactly one PASS/FAIL line per criterion and exits nonzero if any
// fail. The checks re-derive their fixtures and loops locally instead of
// calling the verification suites, so the two layers audit each other.
#include <chrono>
#include <cstdio>
#include <exception>
#include <initializer_list>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qpehr/character.hh"
#include "qpehr/ehrhart.hh"
#include "qpehr/enumerate.hh"
#include "qpehr/hopf.hh"
#include "qpehr/polynomial.hh"
#include "qpehr/quasiposet.hh"
#include "qpehr/wqsym.hh"

using namespace qpehr;

namespace {

struct Gate {
  long cases = 0;
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Polynomial polyFrom(std::initializer_list<const char*> coeffs) {
  std::vector<Rat> cs;
  for (const char* c : coeffs) cs.push_back(parseRat(c));
  return Polynomial(cs);
}

WordComb wordsFrom(std::initializer_list<const char*> words) {
  WordComb out;
  for (const char* w : words) out.add(parsePackedWord(w), Rat(1));
  return out;
}

const std::vector<QuasiPoset>& isoReps(int n) {
  static std::vector<std::vector<QuasiPoset>> cache;
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(enumerateIsoReps(static_cast<int>(cache.size()), false));
  return cache[n];
}

const std::vector<QuasiPoset>& labeledAll(int n) {
  static std::vector<std::vector<QuasiPoset>> cache;
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(enumerateLabeled(static_cast<int>(cache.size()), false));
  return cache[n];
}

int clOf(const QuasiPoset& p) { return quotient(p).cl; }

Rat signCl(const QuasiPoset& p) { return Rat(clOf(p) % 2 == 0 ? 1 : -1); }

Rat signClCc(const QuasiPoset& p) {
  int cc = static_cast<int>(connectedComponents(p).size());
  return Rat((clOf(p) + cc) % 2 == 0 ? 1 : -1);
}

// ---- 1. closed-form count polynomials and the connected tables -------------

void c1Tables(Gate& g) {
  struct Closed {
    const char* text;
    Polynomial weak;
    Polynomial strict;
  };
  const std::vector<Closed> closed = {
      {"1:", polyFrom({"0", "1"}), polyFrom({"0", "1"})},
      {"2: 1<2", polyFrom({"0", "1/2", "1/2"}), polyFrom({"0", "-1/2", "1/2"})},
      {"3: 1<2 1<3", polyFrom({"0", "1/6", "1/2", "1/3"}),
       polyFrom({"0", "1/6", "-1/2", "1/3"})},
      {"3: 1<3 2<3", polyFrom({"0", "1/6", "1/2", "1/3"}),
       polyFrom({"0", "1/6", "-1/2", "1/3"})},
      {"3: 1<2 2<3", polyFrom({"0", "1/3", "1/2", "1/6"}),
       polyFrom({"0", "1/3", "-1/2", "1/6"})},
  };
  for (const Closed& row : closed) {
    QuasiPoset p = parseQuasiPoset(row.text);
    g.require(ehrPolynomial(p, CountMode::WEAK) == row.weak,
              std::string("weak closed form at ") + row.text);
    g.require(ehrPolynomial(p, CountMode::STRICT) == row.strict,
              std::string("strict closed form at ") + row.text);
  }

  struct Row {
    const char* text;
    const char* lambda;
    long pf;
    const char* alpha;
  };
  const std::vector<Row> table = {
      {"1:", "1", 1, "1"},
      {"2: 1<2", "1/2", 2, "1/2"},
      {"3: 1<2 1<3", "1/3", 3, "1/6"},
      {"3: 1<3 2<3", "1/3", 4, "1/6"},
      {"3: 1<2 2<3", "1/6", 6, "1/3"},
      {"4: 1<2 1<3 1<4", "1/4", 4, "0"},
      {"4: 1<4 2<4 3<4", "1/4", 8, "0"},
      {"4: 1<2 1<3 3<4", "1/8", 8, "1/12"},
      {"4: 2<1 3<1 4<3", "1/8", 12, "1/12"},
      {"4: 1<2 2<3 2<4", "1/12", 12, "1/6"},
      {"4: 2<1 3<2 4<2", "1/12", 18, "1/6"},
      {"4: 1<2 2<3 3<4", "1/24", 24, "1/4"},
      {"4: 1<3 2<3 2<4", "5/24", 6, "1/12"},
      {"4: 1<3 1<4 2<3 2<4", "1/6", 9, "1/6"},
      {"4: 1<2 1<3 2<4 3<4", "1/12", 16, "1/6"},
  };
  Character lambda = builtinCharacter(BuiltinChar::LAMBDA);
  Character alpha = builtinCharacter(BuiltinChar::ALPHA);
  for (const Row& row : table) {
    QuasiPoset p = parseQuasiPoset(row.text);
    HeapStats hs = heapStats(p);
    g.require(hs.lambdaValue == parseRat(row.lambda) &&
                  lambda(p) == parseRat(row.lambda),
              std::string("lambda at ") + row.text);
    g.require(hs.pFactorial == Int(row.pf),
              std::string("up-set product at ") + row.text);
    g.require(alpha(p) == parseRat(row.alpha),
              std::string("alpha at ") + row.text);
  }
}

// ---- 2. packed-word fixtures ------------------------------------------------

void c2WordFixtures(Gate& g) {
  struct Prod {
    const char* u;
    const char* v;
    WordComb want;
  };
  const std::vector<Prod> products = {
      {"(11)", "(11)", wordsFrom({"(1111)", "(1122)", "(2211)"})},
      {"(11)", "(12)",
       wordsFrom({"(1112)", "(1123)", "(2212)", "(2213)", "(3312)"})},
      {"(11)", "(21)",
       wordsFrom({"(1121)", "(1132)", "(2221)", "(2231)", "(3321)"})},
      {"(12)", "(11)",
       wordsFrom({"(1211)", "(1222)", "(1233)", "(1322)", "(2311)"})},
      {"(12)", "(12)",
       wordsFrom({"(1212)", "(1213)", "(1223)", "(1234)", "(1312)", "(1323)",
                  "(1324)", "(1423)", "(2312)", "(2313)", "(2314)", "(2413)",
                  "(3412)"})},
      {"(12)", "(21)",
       wordsFrom({"(1221)", "(1231)", "(1232)", "(1243)", "(1321)", "(1332)",
                  "(1342)", "(1432)", "(2321)", "(2331)", "(2341)", "(2431)",
                  "(3421)"})},
  };
  for (const Prod& row : products)
    g.require(productW(parsePackedWord(row.u), parsePackedWord(row.v)) == row.want,
              std::string(row.u) + " * " + row.v);

  struct Split {
    const char* w;
    std::vector<std::pair<const char*, const char*>> terms;
  };
  const std::vector<Split> coproducts = {
      {"(111)", {{"(111)", "()"}, {"()", "(111)"}}},
      {"(212)", {{"(212)", "()"}, {"(1)", "(11)"}, {"()", "(212)"}}},
      {"(312)",
       {{"(312)", "()"}, {"(1)", "(21)"}, {"(12)", "(1)"}, {"()", "(312)"}}},
  };
  for (const Split& row : coproducts) {
    WordTensor want;
    for (const auto& [a, b] : row.terms)
      want.add({parsePackedWord(a), parsePackedWord(b)}, Rat(1));
    g.require(coproductW(parsePackedWord(row.w)) == want,
              std::string("level split of ") + row.w);
  }

  const std::vector<Split> internal = {
      {"(11)", {{"(11)", "(11)"}}},
      {"(12)",
       {{"(12)", "(11)"}, {"(12)", "(12)"}, {"(12)", "(21)"}, {"(11)", "(12)"}}},
      {"(21)",
       {{"(21)", "(11)"}, {"(21)", "(12)"}, {"(21)", "(21)"}, {"(11)", "(21)"}}},
  };
  for (const Split& row : internal) {
    WordTensor want;
    for (const auto& [a, b] : row.terms)
      want.add({parsePackedWord(a), parsePackedWord(b)}, Rat(1));
    g.require(internalCoproductW(parsePackedWord(row.w)) == want,
              std::string("internal coproduct of ") + row.w);
  }

  struct Count {
    const char* text;
    WordComb weak;
    WordComb strict;
  };
  const std::vector<Count> counts = {
      {"2: 1<2", wordsFrom({"(11)", "(12)"}), wordsFrom({"(12)"})},
      {"2: 1~2", wordsFrom({"(11)"}), wordsFrom({"(11)"})},
      {"3: 1<2 1<3",
       wordsFrom({"(111)", "(112)", "(121)", "(122)", "(123)", "(132)"}),
       wordsFrom({"(122)", "(123)", "(132)"})},
  };
  for (const Count& row : counts) {
    QuasiPoset p = parseQuasiPoset(row.text);
    g.require(ehrMorphism(p, CountMode::WEAK) == row.weak,
              std::string("weak words at ") + row.text);
    g.require(ehrMorphism(p, CountMode::STRICT) == row.strict,
              std::string("strict words at ") + row.text);
  }
}

// ---- 3. counting paths vs the brute-force oracle ----------------------------

void c3Oracle(Gate& g) {
  for (int n = 0; n <= 4; ++n)
    for (const QuasiPoset& p : isoReps(n))
      for (CountMode mode : {CountMode::WEAK, CountMode::STRICT}) {
        Polynomial poly = ehrPolynomial(p, mode);
        g.require(poly == ehrRecursive(p, mode),
                  "summation paths disagree at " + quasiPosetText(p));
        for (int k = 0; k <= 4; ++k) {
          Rat value = evaluateAt(poly, Rat(k));
          Int brute = countMaps(p, k, mode);
          g.require(value == Rat(brute) && brute == countMapsSerial(p, k, mode),
                    "count mismatch at " + quasiPosetText(p) + ", k = " +
                        std::to_string(k));
        }
      }
}

// ---- 4. weak-strict duality --------------------------------------------------

void c4Duality(Gate& g) {
  for (int n = 0; n <= 4; ++n)
    for (const QuasiPoset& p : isoReps(n)) {
      Polynomial weak = ehrPolynomial(p, CountMode::WEAK);
      Polynomial strict = ehrPolynomial(p, CountMode::STRICT);
      Rat s = signCl(p);
      g.require(strict == s * reflectNegate(weak),
                "strict != sign-reflected weak at " + quasiPosetText(p));
      g.require(weak == s * reflectNegate(strict),
                "weak != sign-reflected strict at " + quasiPosetText(p));
    }

  for (int n = 0; n <= 3; ++n)
    for (const QuasiPoset& p : labeledAll(n)) {
      WordComb weak = ehrMorphism(p, CountMode::WEAK);
      WordComb strict = ehrMorphism(p, CountMode::STRICT);
      g.require(weak == phiAutomorphism(strict, Rat(-1)) * signCl(p),
                "word duality (weak side) at " + quasiPosetText(p));
      g.require(strict == phiAutomorphism(weak, Rat(-1)) * signCl(p),
                "word duality (strict side) at " + quasiPosetText(p));
      g.require(weak == applyLinearly(psi(qpBasis(p)),
                                      [](const QuasiPoset& q) {
                                        return phiAutomorphism(
                                            ehrMorphism(q, CountMode::STRICT),
                                            Rat(-1));
                                      }),
                "sign-twisted transport at " + quasiPosetText(p));
    }
}

// ---- 5. character convolution inverses ---------------------------------------

void c5Characters(Gate& g) {
  Character lambda = builtinCharacter(BuiltinChar::LAMBDA);
  Character alphaStr = builtinCharacter(BuiltinChar::ALPHA_STR);
  Character alpha = builtinCharacter(BuiltinChar::ALPHA);
  Character beta = builtinCharacter(BuiltinChar::BETA);
  Character epsPrime = builtinCharacter(BuiltinChar::EPS_PRIME);
  Character conv = convolve(lambda, alphaStr);
  Character convBack = convolve(alphaStr, lambda);
  Character invLambda = inverseCharacter(lambda);
  Character invAlpha = inverseCharacter(alpha);

  for (int n = 0; n <= 5; ++n)
    for (const QuasiPoset& p : enumerateConnectedIsoReps(n, false)) {
      g.require(conv(p) == epsPrime(p) && convBack(p) == epsPrime(p),
                "lambda * alpha-str misses the unit at " + quasiPosetText(p));
      g.require(invLambda(p) == alphaStr(p),
                "inverse of lambda is not alpha-str at " + quasiPosetText(p));
    }

  for (int n = 0; n <= 4; ++n)
    for (const QuasiPoset& p : isoReps(n)) {
      Rat b = beta(p);
      g.require(invAlpha(p) == b, "inverse of alpha is not beta at " +
                                      quasiPosetText(p));
      g.require(b == signClCc(p) * lambda(p),
                "beta is not signed lambda at " + quasiPosetText(p));
    }
}

// ---- 6. bialgebra, antipode, and comodule axioms ------------------------------

using Triple = std::tuple<QuasiPoset, QuasiPoset, QuasiPoset>;

LinComb<Triple> splitAgain(const QPTensor& t, bool internal, bool firstLeg) {
  LinComb<Triple> out;
  for (const auto& [ab, c] : t.terms()) {
    const QuasiPoset& target = firstLeg ? ab.first : ab.second;
    QPTensor inner =
        internal ? coproductDeltaInternal(target) : coproductDelta(target);
    for (const auto& [xy, c2] : inner.terms()) {
      if (firstLeg)
        out.add({xy.first, xy.second, ab.second}, c * c2);
      else
        out.add({ab.first, xy.first, xy.second}, c * c2);
    }
  }
  return out;
}

QPComb stripCounit(const QPTensor& t, CounitMode mode, bool firstLeg) {
  QPComb out;
  for (const auto& [ab, c] : t.terms()) {
    Rat e = counit(qpBasis(firstLeg ? ab.first : ab.second), mode);
    out.add(firstLeg ? ab.second : ab.first, c * e);
  }
  return out;
}

QPComb antipodeConvolution(const QuasiPoset& p, bool antipodeFirst) {
  QPComb out;
  for (const auto& [ab, c] : coproductDelta(p).terms()) {
    QPComb left = antipodeFirst ? antipode(ab.first) : qpBasis(ab.first);
    QPComb right = antipodeFirst ? qpBasis(ab.second) : antipode(ab.second);
    out += productQP(left, right) * c;
  }
  return out;
}

void c6Axioms(Gate& g) {
  for (int n = 0; n <= 4; ++n)
    for (const QuasiPoset& p : labeledAll(n)) {
      std::string at = " at " + quasiPosetText(p);
      QPTensor d = coproductDelta(p);
      g.require(splitAgain(d, false, true) == splitAgain(d, false, false),
                "restriction coproduct is not coassociative" + at);
      g.require(stripCounit(d, CounitMode::EPS, true) == qpBasis(p) &&
                    stripCounit(d, CounitMode::EPS, false) == qpBasis(p),
                "counit law fails for the restriction coproduct" + at);
      QPComb unitPart = qpBasis(QuasiPoset()) * counit(qpBasis(p), CounitMode::EPS);
      g.require(antipodeConvolution(p, true) == unitPart &&
                    antipodeConvolution(p, false) == unitPart,
                "antipode convolution misses the unit" + at);

      if (n > 3) continue;
      QPTensor di = coproductDeltaInternal(p);
      g.require(splitAgain(di, true, true) == splitAgain(di, true, false),
                "contraction coproduct is not coassociative" + at);
      g.require(
          stripCounit(di, CounitMode::EPS_PRIME, true) == qpBasis(p) &&
              stripCounit(di, CounitMode::EPS_PRIME, false) == qpBasis(p),
          "counit law fails for the contraction coproduct" + at);

      CoactionComb viaAntipodeFirst = coaction(antipode(p));
      CoactionComb viaAntipodeAfter;
      for (const auto& [leg, c] : coaction(p).terms())
        for (const auto& [a, c2] : antipode(leg.first).terms())
          viaAntipodeAfter.add({a, leg.second}, c * c2);
      g.require(viaAntipodeFirst == viaAntipodeAfter,
                "antipode does not commute with the coaction" + at);
    }
}

// ---- 7. strict-to-weak transport and the word lift ----------------------------

void c7Transport(Gate& g) {
  for (int n = 0; n <= 4; ++n)
    for (const QuasiPoset& p : isoReps(n)) {
      Polynomial lifted = applyLinearly(theta(qpBasis(p)), [](const QuasiPoset& q) {
        return ehrPolynomial(q, CountMode::STRICT);
      });
      g.require(lifted == ehrPolynomial(p, CountMode::WEAK),
                "strict count of theta misses the weak count at " +
                    quasiPosetText(p));
    }

  for (int n = 0; n <= 4; ++n)
    for (const QuasiPoset& p : labeledAll(n)) {
      std::string at = " at " + quasiPosetText(p);
      g.require(ehrMorphism(theta(qpBasis(p)), CountMode::STRICT) ==
                    ehrMorphism(p, CountMode::WEAK),
                "word transport fails" + at);
      g.require(hMorphism(ehrMorphism(p, CountMode::WEAK)) ==
                    ehrPolynomial(p, CountMode::WEAK),
                "word collapse fails weakly" + at);
      g.require(hMorphism(ehrMorphism(p, CountMode::STRICT)) ==
                    ehrPolynomial(p, CountMode::STRICT),
                "word collapse fails strictly" + at);
    }

  for (int np = 1; np <= 3; ++np)
    for (int nq = 1; np + nq <= 4; ++nq)
      for (const QuasiPoset& p : labeledAll(np))
        for (const QuasiPoset& q : labeledAll(nq)) {
          QuasiPoset stacked = productOrdinal(p, q);
          std::string at = " at " + quasiPosetText(p) + " under " +
                           quasiPosetText(q);
          g.require(ehrMorphism(stacked, CountMode::STRICT) ==
                        ordinalProduct(ehrMorphism(p, CountMode::STRICT),
                                       ehrMorphism(q, CountMode::STRICT),
                                       OrdinalMode::DOWN),
                    "strict ordinal transport fails" + at);
          g.require(ehrMorphism(stacked, CountMode::WEAK) ==
                        ordinalProduct(ehrMorphism(p, CountMode::WEAK),
                                       ehrMorphism(q, CountMode::WEAK),
                                       OrdinalMode::LIGHTNING),
                    "weak ordinal transport fails" + at);
        }
}

// ---- 8. Bernoulli numbers and Faulhaber polynomials ---------------------------

void c8Bernoulli(Gate& g) {
  g.require(bernoulli(0) == Rat(1), "b_0 != 1");
  g.require(bernoulli(1) == Rat(-1, 2), "b_1 != -1/2");
  for (int m = 1; m <= 8; ++m) {
    Rat acc = 0;
    for (int j = 0; j <= m; ++j) acc += binomial(m + 1, j) * bernoulli(j);
    g.require(acc == 0, "recurrence fails at m = " + std::to_string(m));
  }
  for (int k = 0; k <= 6; ++k) {
    Polynomial s = faulhaber(k);
    for (int n = 1; n <= 10; ++n) {
      Rat want = 0;
      for (int i = 1; i < n; ++i) {
        Rat term = 1;
        for (int e = 0; e < k; ++e) term *= i;
        want += term;
      }
      g.require(evaluateAt(s, Rat(n)) == want,
                "power sum fails at k = " + std::to_string(k) +
                    ", n = " + std::to_string(n));
    }
  }
  Character alphaStr = builtinCharacter(BuiltinChar::ALPHA_STR);
  for (int k = 0; k <= 6; ++k)
    g.require(alphaStr(corolla(k)) == bernoulli(k),
              "strict corolla coefficient misses b_" + std::to_string(k));
}

// ---- 9. enumeration counts ----------------------------------------------------

void c9Enumeration(Gate& g) {
  const long qpCounts[] = {1, 1, 4, 29, 355};
  const long posetCounts[] = {1, 1, 3, 19, 219};
  const long isoQpCounts[] = {1, 1, 3, 9};
  for (int n = 0; n <= 4; ++n) {
    g.require(static_cast<long>(labeledAll(n).size()) == qpCounts[n],
              "labeled quasi-poset count at n = " + std::to_string(n));
    g.require(static_cast<long>(enumerateLabeled(n, true).size()) ==
                  posetCounts[n],
              "labeled poset count at n = " + std::to_string(n));
  }
  for (int n = 0; n <= 3; ++n)
    g.require(static_cast<long>(isoReps(n).size()) == isoQpCounts[n],
              "iso-class count at n = " + std::to_string(n));
}

// ---- 10. word order structure and order reconstruction -------------------------

void c10WordOrder(Gate& g) {
  for (int n = 0; n <= 4; ++n) {
    std::vector<PackedWord> all = allPackedWords(n);
    for (const QuasiPoset& p : isoReps(n)) {
      std::string at = " at " + quasiPosetText(p);

      std::set<PackedWord> weak;
      for (const auto& [w, c] : ehrMorphism(p, CountMode::WEAK).terms())
        weak.insert(w);
      std::vector<PackedWord> extList = linearExtensions(p);
      std::set<PackedWord> ext(extList.begin(), extList.end());

      std::set<PackedWord> maximal;
      for (const PackedWord& w : weak) {
        bool top = true;
        for (const PackedWord& w2 : weak)
          if (w2 != w && wordLeq(w, w2)) {
            top = false;
            break;
          }
        if (top) maximal.insert(w);
      }
      g.require(maximal == ext, "maximal weak words are not the extensions" + at);

      std::set<PackedWord> downUnion;
      for (const PackedWord& w : all)
        for (const PackedWord& e : ext)
          if (wordLeq(w, e)) {
            downUnion.insert(w);
            break;
          }
      g.require(downUnion == weak,
                "weak words are not the down-sets of the extensions" + at);

      std::vector<PackedWord> strictWords;
      for (const auto& [w, c] : ehrMorphism(p, CountMode::STRICT).terms())
        strictWords.push_back(w);
      g.require(reconstructOrder(strictWords, n) == p,
                "strict words do not reconstruct the order" + at);
    }
  }
}

struct Criterion {
  const char* name;
  long budgetMs;
  void (*fn)(Gate&);
};

const Criterion kCriteria[] = {
    {"closed-form count polynomials and connected tables", 1000, c1Tables},
    {"packed-word product and coproduct fixtures", 1000, c2WordFixtures},
    {"counting paths agree with the brute-force oracle", 30000, c3Oracle},
    {"weak-strict duality, polynomial and word-valued", 60000, c4Duality},
    {"character convolution inverses", 120000, c5Characters},
    {"bialgebra, antipode, and comodule axioms", 120000, c6Axioms},
    {"strict-to-weak transport and word lifts", 120000, c7Transport},
    {"Bernoulli numbers and Faulhaber polynomials", 10000, c8Bernoulli},
    {"enumeration counts", 60000, c9Enumeration},
    {"word order structure and order reconstruction", 60000, c10WordOrder},
};

}  // namespace

int main() {
  bool all = true;
  int num = 0;
  for (const Criterion& c : kCriteria) {
    ++num;
    Gate gate;
    auto start = std::chrono::steady_clock::now();
    try {
      c.fn(gate);
    } catch (const std::exception& e) {
      gate.pass = false;
      gate.detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    bool inBudget = ms < c.budgetMs;
    if (gate.pass && inBudget) {
      std::printf("PASS %2d. %s (%ld cases, %lld ms, budget %ld ms)\n", num,
                  c.name, gate.cases, static_cast<long long>(ms), c.budgetMs);
    } else {
      all = false;
      std::printf("FAIL %2d. %s: %s (%ld cases, %lld ms, budget %ld ms)\n", num,
                  c.name,
                  gate.pass ? "budget exceeded" : gate.detail.c_str(),
                  gate.cases, static_cast<long long>(ms), c.budgetMs);
    }
  }
  return all ? 0 : 1;
}
