#include "qpehr/verify.hh"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qpehr/character.hh"
#include "qpehr/ehrhart.hh"
#include "qpehr/enumerate.hh"
#include "qpehr/hopf.hh"
#include "qpehr/lincomb.hh"
#include "qpehr/packedword.hh"
#include "qpehr/polynomial.hh"
#include "qpehr/quasiposet.hh"
#include "qpehr/wqsym.hh"

namespace qpehr {
namespace {

int capped(int maxN, int def) { return maxN > 0 ? std::min(maxN, def) : def; }

// Identities only ever report the first counterexample; later cases still
// count so the report shows how much ground a passing identity covered.
struct Checker {
  IdentityResult res;

  explicit Checker(std::string name) { res.name = std::move(name); }

  template <class DetailFn>
  void require(bool ok, DetailFn&& detail) {
    ++res.cases;
    if (!ok && res.pass) {
      res.pass = false;
      res.detail = detail();
    }
  }

  IdentityResult done() && { return std::move(res); }
};

const std::vector<QuasiPoset>& labeledAll(int n) {
  static std::map<int, std::vector<QuasiPoset>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerateLabeled(n, false)).first;
  return it->second;
}

const std::vector<QuasiPoset>& isoAll(int n) {
  static std::map<int, std::vector<QuasiPoset>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerateIsoReps(n, false)).first;
  return it->second;
}

const std::vector<QuasiPoset>& isoPosets(int n) {
  static std::map<int, std::vector<QuasiPoset>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerateIsoReps(n, true)).first;
  return it->second;
}

const std::vector<QuasiPoset>& isoConnected(int n) {
  static std::map<int, std::vector<QuasiPoset>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, enumerateConnectedIsoReps(n, false)).first;
  return it->second;
}

template <class F>
void forLabeledUpTo(int bound, F&& f) {
  for (int n = 0; n <= bound; ++n)
    for (const QuasiPoset& p : labeledAll(n)) f(p);
}

template <class F>
void forIsoUpTo(int bound, F&& f) {
  for (int n = 0; n <= bound; ++n)
    for (const QuasiPoset& p : isoAll(n)) f(p);
}

const Character& chEpsPrime() {
  static const Character c = builtinCharacter(BuiltinChar::EPS_PRIME);
  return c;
}
const Character& chIota() {
  static const Character c = builtinCharacter(BuiltinChar::IOTA);
  return c;
}
const Character& chLambda() {
  static const Character c = builtinCharacter(BuiltinChar::LAMBDA);
  return c;
}
const Character& chAlpha() {
  static const Character c = builtinCharacter(BuiltinChar::ALPHA);
  return c;
}
const Character& chAlphaStr() {
  static const Character c = builtinCharacter(BuiltinChar::ALPHA_STR);
  return c;
}
const Character& chBeta() {
  static const Character c = builtinCharacter(BuiltinChar::BETA);
  return c;
}

QuasiPoset quotientPoset(const QuasiPoset& p) {
  QuotientView q = quotient(p);
  return QuasiPoset(q.cl, q.order);
}

Rat signClCc(const QuasiPoset& p) {
  int s = quotient(p).cl + static_cast<int>(connectedComponents(p).size());
  return s % 2 == 0 ? Rat(1) : Rat(-1);
}

Rat signCl(const QuasiPoset& p) {
  return quotient(p).cl % 2 == 0 ? Rat(1) : Rat(-1);
}

Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int powInt(long base, int exp) {
  Int acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

std::string describe(const QuasiPoset& p) { return "P = " + quasiPosetText(p); }

std::string describe2(const QuasiPoset& p, const QuasiPoset& q) {
  return "P = " + quasiPosetText(p) + ", Q = " + quasiPosetText(q);
}

std::string describeWord(const PackedWord& w) {
  return "w = " + packedWordText(w);
}

using QPTriple = std::tuple<QuasiPoset, QuasiPoset, CanonicalKey>;
using WordTriple = std::tuple<PackedWord, PackedWord, PackedWord>;

// ---------------------------------------------------------------------------
// hopf suite
// ---------------------------------------------------------------------------

IdentityResult idDeltaCoassoc(int maxN) {
  Checker ck("delta-coassociative");
  forLabeledUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    LinComb<std::tuple<QuasiPoset, QuasiPoset, QuasiPoset>> lhs, rhs;
    for (const auto& [ab, c] : coproductDelta(p).terms()) {
      for (const auto& [a12, c2] : coproductDelta(ab.first).terms())
        lhs.add({a12.first, a12.second, ab.second}, c * c2);
      for (const auto& [b12, c2] : coproductDelta(ab.second).terms())
        rhs.add({ab.first, b12.first, b12.second}, c * c2);
    }
    ck.require(lhs == rhs, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idDeltaInternalCoassoc(int maxN) {
  Checker ck("delta-internal-coassociative");
  forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
    LinComb<std::tuple<QuasiPoset, QuasiPoset, QuasiPoset>> lhs, rhs;
    for (const auto& [ab, c] : coproductDeltaInternal(p).terms()) {
      for (const auto& [a12, c2] : coproductDeltaInternal(ab.first).terms())
        lhs.add({a12.first, a12.second, ab.second}, c * c2);
      for (const auto& [b12, c2] : coproductDeltaInternal(ab.second).terms())
        rhs.add({ab.first, b12.first, b12.second}, c * c2);
    }
    ck.require(lhs == rhs, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idDeltaMultiplicative(int maxN) {
  Checker ck("delta-multiplicative");
  int bound = capped(maxN, 4);
  for (int np = 1; np < bound; ++np)
    for (int nq = 1; np + nq <= bound; ++nq)
      for (const QuasiPoset& p : labeledAll(np))
        for (const QuasiPoset& q : labeledAll(nq)) {
          QPTensor lhs = coproductDelta(productDisjoint(p, q));
          QPTensor rhs;
          for (const auto& [ab, c] : coproductDelta(p).terms())
            for (const auto& [cd, c2] : coproductDelta(q).terms())
              rhs.add({productDisjoint(ab.first, cd.first),
                       productDisjoint(ab.second, cd.second)},
                      c * c2);
          ck.require(lhs == rhs, [&] { return describe2(p, q); });
        }
  return std::move(ck).done();
}

IdentityResult idDeltaInternalMultiplicative(int maxN) {
  Checker ck("delta-internal-multiplicative");
  int bound = capped(maxN, 4);
  for (int np = 1; np < bound; ++np)
    for (int nq = 1; np + nq <= bound; ++nq)
      for (const QuasiPoset& p : labeledAll(np))
        for (const QuasiPoset& q : labeledAll(nq)) {
          QPTensor lhs = coproductDeltaInternal(productDisjoint(p, q));
          QPTensor rhs;
          for (const auto& [ab, c] : coproductDeltaInternal(p).terms())
            for (const auto& [cd, c2] : coproductDeltaInternal(q).terms())
              rhs.add({productDisjoint(ab.first, cd.first),
                       productDisjoint(ab.second, cd.second)},
                      c * c2);
          ck.require(lhs == rhs, [&] { return describe2(p, q); });
        }
  return std::move(ck).done();
}

IdentityResult idCounitLevel(int maxN) {
  Checker ck("counit-level");
  forLabeledUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    QPComb left, right;
    for (const auto& [ab, c] : coproductDelta(p).terms()) {
      if (ab.first.n() == 0) left.add(ab.second, c);
      if (ab.second.n() == 0) right.add(ab.first, c);
    }
    QPComb expect = qpBasis(p);
    ck.require(left == expect && right == expect, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idCounitInternal(int maxN) {
  Checker ck("counit-internal");
  forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
    QPComb left, right;
    for (const auto& [ab, c] : coproductDeltaInternal(p).terms()) {
      if (!hasStrictPair(ab.first)) left.add(ab.second, c);
      if (!hasStrictPair(ab.second)) right.add(ab.first, c);
    }
    QPComb expect = qpBasis(p);
    ck.require(left == expect && right == expect, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idAntipodeConvolution(int maxN) {
  Checker ck("antipode-convolution");
  forLabeledUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    QPComb left, right;
    for (const auto& [ab, c] : coproductDelta(p).terms()) {
      QPComb l = productQP(antipode(ab.first), qpBasis(ab.second));
      l *= c;
      left += l;
      QPComb r = productQP(qpBasis(ab.first), antipode(ab.second));
      r *= c;
      right += r;
    }
    QPComb expect;  // eta(eps(P)): the empty element when P is empty
    if (p.n() == 0) expect = qpBasis(p);
    ck.require(left == expect && right == expect, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idIsoDescent(int maxN) {
  Checker ck("iso-class-descent");
  forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
    QuasiPoset rep = canonicalForm(p).representative;
    bool ok =
        isoClasses(coproductDelta(p)) == isoClasses(coproductDelta(rep)) &&
        isoClasses(coproductDeltaInternal(p)) ==
            isoClasses(coproductDeltaInternal(rep)) &&
        isoClasses(antipode(p)) == isoClasses(antipode(rep)) &&
        isoClasses(theta(qpBasis(p))) == isoClasses(theta(qpBasis(rep)));
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idEhrHopfMorphism(int maxN) {
  Checker ck("ehr-hopf-morphism");
  int bound = capped(maxN, 4);
  for (CountMode mode : {CountMode::WEAK, CountMode::STRICT}) {
    forIsoUpTo(bound, [&](const QuasiPoset& p) {
      Polynomial whole = ehrPolynomial(p, mode);
      QPTensor split = coproductDelta(p);
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
          Rat lhs = evaluateAt(whole, Rat(a + b));
          Rat rhs(0);
          for (const auto& [legs, c] : split.terms())
            rhs += c * evaluateAt(ehrPolynomial(legs.first, mode), Rat(a)) *
                   evaluateAt(ehrPolynomial(legs.second, mode), Rat(b));
          ck.require(lhs == rhs, [&] {
            return describe(p) + ", split at (" + std::to_string(a) + "," +
                   std::to_string(b) + ")";
          });
        }
    });
    for (int np = 0; np <= bound; ++np)
      for (int nq = 0; np + nq <= bound; ++nq)
        for (const QuasiPoset& p : isoAll(np))
          for (const QuasiPoset& q : isoAll(nq)) {
            bool ok = ehrPolynomial(productDisjoint(p, q), mode) ==
                      ehrPolynomial(p, mode) * ehrPolynomial(q, mode);
            ck.require(ok, [&] { return describe2(p, q); });
          }
  }
  return std::move(ck).done();
}

IdentityResult idMapCountOracle(int maxN) {
  Checker ck("map-count-oracle");
  int bound = capped(maxN, 4);
  for (CountMode mode : {CountMode::WEAK, CountMode::STRICT})
    forIsoUpTo(bound, [&](const QuasiPoset& p) {
      Polynomial poly = ehrPolynomial(p, mode);
      for (int k = 0; k <= 4; ++k) {
        Int brute = countMaps(p, k, mode);
        Int serial = countMapsSerial(p, k, mode);
        bool ok = brute == serial && evaluateAt(poly, Rat(k)) == Rat(brute);
        ck.require(ok, [&] { return describe(p) + ", k = " + std::to_string(k); });
      }
    });
  return std::move(ck).done();
}

IdentityResult idPathAgreement(int maxN) {
  Checker ck("recursion-path-agreement");
  int bound = capped(maxN, 4);
  for (CountMode mode : {CountMode::WEAK, CountMode::STRICT})
    forIsoUpTo(bound, [&](const QuasiPoset& p) {
      Polynomial viaWords = ehrPolynomial(p, mode);
      Polynomial viaOpens = ehrRecursive(p, mode);
      bool ok = viaWords == viaOpens &&
                (p.n() == 0 || viaWords.degree() == quotient(p).cl);
      ck.require(ok, [&] { return describe(p); });
    });
  return std::move(ck).done();
}

IdentityResult idQuotientInvariance(int maxN) {
  Checker ck("quotient-invariance");
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    QuasiPoset bar = quotientPoset(p);
    bool ok = ehrPolynomial(p, CountMode::WEAK) ==
                  ehrPolynomial(bar, CountMode::WEAK) &&
              ehrPolynomial(p, CountMode::STRICT) ==
                  ehrPolynomial(bar, CountMode::STRICT) &&
              chLambda()(p) == chLambda()(bar) && chAlpha()(p) == chAlpha()(bar);
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

// ---------------------------------------------------------------------------
// cointeraction suite
// ---------------------------------------------------------------------------

IdentityResult idCointeractionAxiom(int maxN) {
  Checker ck("cointeraction-axiom");
  forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
    LinComb<QPTriple> lhs, rhs;
    for (const auto& [ab, c] : coproductDelta(p).terms())
      for (const auto& [r1, c1] : coaction(ab.first).terms())
        for (const auto& [r2, c2] : coaction(ab.second).terms())
          lhs.add({r1.first, r2.first, productKeys(r1.second, r2.second)},
                  c * c1 * c2);
    for (const auto& [pk, c] : coaction(p).terms())
      for (const auto& [ab, c2] : coproductDelta(pk.first).terms())
        rhs.add({ab.first, ab.second, pk.second}, c * c2);
    ck.require(lhs == rhs, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idAntipodeComodule(int maxN) {
  Checker ck("antipode-comodule");
  forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
    CoactionComb lhs = coaction(antipode(p));
    CoactionComb rhs;
    for (const auto& [pk, c] : coaction(p).terms())
      for (const auto& [s, c2] : antipode(pk.first).terms())
        rhs.add({s, pk.second}, c * c2);
    ck.require(lhs == rhs, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idPhiComposition(int maxN) {
  Checker ck("phi-composition");
  const std::vector<std::pair<const Character*, const Character*>> pairs = {
      {&chLambda(), &chAlpha()},
      {&chAlpha(), &chLambda()},
      {&chIota(), &chLambda()},
  };
  for (const auto& [outer, inner] : pairs) {
    Character combined = convolve(*outer, *inner);
    forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
      QPComb lhs = phiEndomorphism(phiEndomorphism(qpBasis(p), *inner), *outer);
      QPComb rhs = phiEndomorphism(qpBasis(p), combined);
      ck.require(lhs == rhs, [&] {
        return describe(p) + " under " + outer->name() + " after " +
               inner->name();
      });
    });
  }
  return std::move(ck).done();
}

IdentityResult idThetaBijective(int maxN) {
  Checker ck("theta-bijective");
  forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
    QPComb unit = qpBasis(p);
    bool ok = thetaInverse(theta(unit)) == unit && theta(thetaInverse(unit)) == unit;
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

// ---------------------------------------------------------------------------
// duality suite
// ---------------------------------------------------------------------------

IdentityResult idClassicalDuality(int maxN) {
  Checker ck("classical-duality");
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    Polynomial weak = ehrPolynomial(p, CountMode::WEAK);
    Polynomial strict = ehrPolynomial(p, CountMode::STRICT);
    Rat s = signCl(p);
    bool ok = strict == reflectNegate(weak) * s && weak == reflectNegate(strict) * s;
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idBoundaryValues(int maxN) {
  Checker ck("counit-boundary-values");
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    Rat viaWeak = signCl(p) * evaluateAt(ehrPolynomial(p, CountMode::WEAK), Rat(-1));
    Rat viaStrict = evaluateAt(ehrPolynomial(p, CountMode::STRICT), Rat(1));
    Rat eps = Rat(hasStrictPair(p) ? 0 : 1);
    ck.require(viaWeak == eps && viaStrict == eps, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idNoncommutativeDuality(int maxN) {
  Checker ck("noncommutative-duality");
  forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
    WordComb weak = ehrMorphism(p, CountMode::WEAK);
    WordComb strict = ehrMorphism(p, CountMode::STRICT);
    Rat s = signCl(p);
    WordComb viaPsi =
        phiAutomorphism(ehrMorphism(psi(qpBasis(p)), CountMode::STRICT), Rat(-1));
    bool ok = weak == phiAutomorphism(strict, Rat(-1)) * s &&
              strict == phiAutomorphism(weak, Rat(-1)) * s && viaPsi == weak &&
              psi(psi(qpBasis(p))) == qpBasis(p);
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idPhiMinusOneInvolution(int maxN) {
  Checker ck("phi-minus-one-involution");
  int bound = capped(maxN, 3);
  for (int len = 0; len <= bound; ++len)
    for (const PackedWord& w : allPackedWords(len)) {
      WordComb unit = wordBasis(w);
      bool ok = phiAutomorphism(phiAutomorphism(unit, Rat(-1)), Rat(-1)) == unit &&
                phiAutomorphism(unit, Rat(1)) == unit;
      ck.require(ok, [&] { return describeWord(w); });
    }
  return std::move(ck).done();
}

IdentityResult idOrdinalExchange(int maxN) {
  Checker ck("ordinal-exchange");
  int bound = capped(maxN, 2);
  for (int lu = 1; lu <= bound; ++lu)
    for (int lv = 1; lv <= bound; ++lv)
      for (const PackedWord& u : allPackedWords(lu))
        for (const PackedWord& v : allPackedWords(lv)) {
          WordComb mu = phiAutomorphism(wordBasis(u), Rat(-1));
          WordComb mv = phiAutomorphism(wordBasis(v), Rat(-1));
          bool ok =
              phiAutomorphism(ordinalProduct(u, v, OrdinalMode::DOWN), Rat(-1)) ==
                  ordinalProduct(mu, mv, OrdinalMode::LIGHTNING) &&
              phiAutomorphism(ordinalProduct(u, v, OrdinalMode::LIGHTNING),
                              Rat(-1)) == ordinalProduct(mu, mv, OrdinalMode::DOWN);
          ck.require(ok, [&] {
            return "u = " + packedWordText(u) + ", v = " + packedWordText(v);
          });
        }
  return std::move(ck).done();
}

IdentityResult idThetaTransportPoly(int maxN) {
  Checker ck("theta-transport");
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    Polynomial acc;
    for (const auto& [t, c] : theta(qpBasis(p)).terms())
      acc += ehrPolynomial(t, CountMode::STRICT) * c;
    ck.require(acc == ehrPolynomial(p, CountMode::WEAK),
               [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idThetaTransportWords(int maxN) {
  Checker ck("theta-transport-words");
  forLabeledUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    WordComb lhs = ehrMorphism(theta(qpBasis(p)), CountMode::STRICT);
    ck.require(lhs == ehrMorphism(p, CountMode::WEAK),
               [&] { return describe(p); });
  });
  return std::move(ck).done();
}

// ---------------------------------------------------------------------------
// characters suite
// ---------------------------------------------------------------------------

IdentityResult idConvolutionMonoid(int maxN) {
  Checker ck("convolution-monoid");
  Character leftUnit = convolve(chEpsPrime(), chLambda());
  Character rightUnit = convolve(chLambda(), chEpsPrime());
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    Rat want = chLambda()(p);
    ck.require(leftUnit(p) == want && rightUnit(p) == want,
               [&] { return describe(p); });
  });
  const std::vector<std::array<const Character*, 3>> triples = {
      {&chLambda(), &chAlpha(), &chIota()},
      {&chAlphaStr(), &chLambda(), &chAlpha()},
  };
  for (const auto& t : triples) {
    Character leftAssoc = convolve(convolve(*t[0], *t[1]), *t[2]);
    Character rightAssoc = convolve(*t[0], convolve(*t[1], *t[2]));
    forIsoUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
      ck.require(leftAssoc(p) == rightAssoc(p), [&] { return describe(p); });
    });
  }
  return std::move(ck).done();
}

IdentityResult idLambdaStrictInverse(int maxN) {
  Checker ck("lambda-strict-inverse");
  Character leftConv = convolve(chLambda(), chAlphaStr());
  Character rightConv = convolve(chAlphaStr(), chLambda());
  Character inv = inverseCharacter(chLambda());
  int bound = capped(maxN, 5);
  for (int n = 0; n <= bound; ++n)
    for (const QuasiPoset& p : isoConnected(n)) {
      Rat eps = chEpsPrime()(p);
      bool ok = leftConv(p) == eps && rightConv(p) == eps &&
                inv(p) == chAlphaStr()(p);
      ck.require(ok, [&] { return describe(p); });
    }
  return std::move(ck).done();
}

IdentityResult idBetaAlphaInverse(int maxN) {
  Checker ck("beta-alpha-inverse");
  Character inv = inverseCharacter(chAlpha());
  Character check = convolve(chAlpha(), chBeta());
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    bool ok = inv(p) == chBeta()(p) && chBeta()(p) == signClCc(p) * chLambda()(p) &&
              check(p) == chEpsPrime()(p);
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idAlphaSign(int maxN) {
  Checker ck("alpha-sign");
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    ck.require(chAlpha()(p) == signClCc(p) * chAlphaStr()(p),
               [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idIotaFactorization(int maxN) {
  Checker ck("iota-factorization");
  Character conv = convolve(chLambda(), chAlpha());
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    ck.require(conv(p) == Rat(1), [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idMorphismReconstruction(int maxN) {
  Checker ck("morphism-reconstruction");
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    Polynomial viaAlpha = morphismFromCharacter(p, chAlpha());
    Polynomial viaAlphaStr = morphismFromCharacter(p, chAlphaStr());
    Polynomial viaEps = morphismFromCharacter(p, chEpsPrime());
    std::vector<Rat> lead(quotient(p).cl + 1, Rat(0));
    lead.back() = chLambda()(p);
    bool ok = viaAlpha == ehrPolynomial(p, CountMode::WEAK) &&
              viaAlphaStr == ehrPolynomial(p, CountMode::STRICT) &&
              viaEps == Polynomial(lead);
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idMorphismNormalization(int maxN) {
  Checker ck("morphism-normalization");
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    bool ok = evaluateAt(morphismFromCharacter(p, chAlpha()), Rat(1)) == Rat(1) &&
              evaluateAt(morphismFromCharacter(p, chAlphaStr()), Rat(1)) ==
                  chEpsPrime()(p) &&
              evaluateAt(morphismFromCharacter(p, chEpsPrime()), Rat(1)) ==
                  chLambda()(p);
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idLambdaSymmetry(int maxN) {
  Checker ck("lambda-symmetry");
  forIsoUpTo(capped(maxN, 4), [&](const QuasiPoset& p) {
    Rat v = chLambda()(p);
    bool ok = v == chLambda()(quotientPoset(p)) && v == chLambda()(opposite(p));
    ck.require(ok, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idForestDichotomy(int maxN) {
  Checker ck("forest-dichotomy");
  int bound = capped(maxN, 5);
  for (int n = 1; n <= bound; ++n)
    for (const QuasiPoset& p : isoPosets(n)) {
      HeapStats hs = heapStats(p);
      Rat floor = Rat(1) / Rat(hs.pFactorial);
      bool ok = hs.lambdaValue >= floor &&
                (hs.lambdaValue == floor) == quotientIsForest(p);
      ck.require(ok, [&] { return describe(p); });
    }
  return std::move(ck).done();
}

IdentityResult idBernoulliRecurrence(int maxN) {
  Checker ck("bernoulli-recurrence");
  int bound = capped(maxN, 8);
  ck.require(bernoulli(0) == Rat(1), [] { return std::string("b_0 != 1"); });
  ck.require(bernoulli(1) == frac(-1, 2), [] { return std::string("b_1 != -1/2"); });
  for (int m = 1; m <= bound; ++m) {
    Rat acc(0);
    for (int j = 0; j <= m; ++j) acc += Rat(binomial(m + 1, j)) * bernoulli(j);
    ck.require(acc == Rat(0), [&] {
      return "sum_j C(" + std::to_string(m + 1) + ",j) b_j = " + ratText(acc);
    });
  }
  return std::move(ck).done();
}

IdentityResult idBernoulliCorolla(int maxN) {
  Checker ck("bernoulli-corolla");
  const std::vector<Rat> known = {Rat(1),     frac(-1, 2), frac(1, 6),
                                  Rat(0),     frac(-1, 30), Rat(0),
                                  frac(1, 42), Rat(0),      frac(-1, 30)};
  int bound = capped(maxN, 6);
  for (int k = 0; k <= bound; ++k) {
    Rat b = bernoulli(k);
    bool ok = chAlphaStr()(corolla(k)) == b &&
              (k >= static_cast<int>(known.size()) || b == known[k]);
    ck.require(ok, [&] { return "k = " + std::to_string(k); });
  }
  return std::move(ck).done();
}

IdentityResult idFaulhaberSums(int maxN) {
  Checker ck("faulhaber-sums");
  int bound = capped(maxN, 6);
  ck.require(faulhaber(0) == Polynomial({Rat(-1), Rat(1)}),
             [] { return std::string("S_0 != X - 1"); });
  ck.require(faulhaber(1) == ehrPolynomial(corolla(1), CountMode::STRICT),
             [] { return std::string("S_1 differs from the 2-chain count"); });
  for (int k = 0; k <= bound; ++k) {
    Polynomial s = faulhaber(k);
    for (long n = 1; n <= 10; ++n) {
      Int acc = 0;
      for (long i = 1; i < n; ++i) acc += powInt(i, k);
      ck.require(evaluateAt(s, Rat(n)) == Rat(acc), [&] {
        return "k = " + std::to_string(k) + ", n = " + std::to_string(n);
      });
    }
  }
  return std::move(ck).done();
}

// ---------------------------------------------------------------------------
// wqsym suite
// ---------------------------------------------------------------------------

IdentityResult idWordProductOracle(int maxN) {
  Checker ck("word-product-oracle");
  int bound = capped(maxN, 4);
  for (int lu = 0; lu <= bound; ++lu)
    for (int lv = 0; lu + lv <= bound; ++lv)
      for (const PackedWord& u : allPackedWords(lu))
        for (const PackedWord& v : allPackedWords(lv)) {
          WordComb want;
          for (const PackedWord& w : allPackedWords(lu + lv)) {
            std::vector<int> head(w.letters().begin(),
                                  w.letters().begin() + lu);
            std::vector<int> tail(w.letters().begin() + lu, w.letters().end());
            if (pack(head) == u && pack(tail) == v) want.add(w, Rat(1));
          }
          ck.require(productW(u, v) == want, [&] {
            return "u = " + packedWordText(u) + ", v = " + packedWordText(v);
          });
        }
  return std::move(ck).done();
}

IdentityResult idLevelBialgebra(int maxN) {
  Checker ck("level-bialgebra");
  int bound = capped(maxN, 3);
  for (int len = 0; len <= bound; ++len)
    for (const PackedWord& w : allPackedWords(len)) {
      LinComb<WordTriple> lhs, rhs;
      for (const auto& [uv, c] : coproductW(w).terms()) {
        for (const auto& [u12, c2] : coproductW(uv.first).terms())
          lhs.add({u12.first, u12.second, uv.second}, c * c2);
        for (const auto& [v12, c2] : coproductW(uv.second).terms())
          rhs.add({uv.first, v12.first, v12.second}, c * c2);
      }
      WordComb left, right;
      for (const auto& [uv, c] : coproductW(w).terms()) {
        if (uv.first.length() == 0) left.add(uv.second, c);
        if (uv.second.length() == 0) right.add(uv.first, c);
      }
      bool ok = lhs == rhs && left == wordBasis(w) && right == wordBasis(w);
      ck.require(ok, [&] { return describeWord(w); });
    }
  int pairBound = capped(maxN, 4);
  for (int lu = 1; lu < pairBound; ++lu)
    for (int lv = 1; lu + lv <= pairBound; ++lv)
      for (const PackedWord& u : allPackedWords(lu))
        for (const PackedWord& v : allPackedWords(lv)) {
          WordTensor lhs = coproductW(productW(u, v));
          WordTensor rhs;
          for (const auto& [ab, c] : coproductW(u).terms())
            for (const auto& [cd, c2] : coproductW(v).terms()) {
              WordTensor cross = tensor(productW(ab.first, cd.first),
                                        productW(ab.second, cd.second));
              cross *= c * c2;
              rhs += cross;
            }
          ck.require(lhs == rhs, [&] {
            return "u = " + packedWordText(u) + ", v = " + packedWordText(v);
          });
        }
  return std::move(ck).done();
}

IdentityResult idInternalBialgebra(int maxN) {
  Checker ck("internal-bialgebra");
  int bound = capped(maxN, 3);
  for (int len = 0; len <= bound; ++len)
    for (const PackedWord& w : allPackedWords(len)) {
      LinComb<WordTriple> lhs, rhs;
      for (const auto& [uv, c] : internalCoproductW(w).terms()) {
        for (const auto& [u12, c2] : internalCoproductW(uv.first).terms())
          lhs.add({u12.first, u12.second, uv.second}, c * c2);
        for (const auto& [v12, c2] : internalCoproductW(uv.second).terms())
          rhs.add({uv.first, v12.first, v12.second}, c * c2);
      }
      WordComb left, right;
      for (const auto& [uv, c] : internalCoproductW(w).terms()) {
        if (uv.first.maxLetter() <= 1) left.add(uv.second, c);
        if (uv.second.maxLetter() <= 1) right.add(uv.first, c);
      }
      bool ok = lhs == rhs && left == wordBasis(w) && right == wordBasis(w);
      ck.require(ok, [&] { return describeWord(w); });
    }
  int pairBound = capped(maxN, 4);
  for (int lu = 1; lu < pairBound; ++lu)
    for (int lv = 1; lu + lv <= pairBound; ++lv)
      for (const PackedWord& u : allPackedWords(lu))
        for (const PackedWord& v : allPackedWords(lv)) {
          WordTensor lhs = internalCoproductW(productW(u, v));
          WordTensor rhs;
          for (const auto& [ab, c] : internalCoproductW(u).terms())
            for (const auto& [cd, c2] : internalCoproductW(v).terms()) {
              WordTensor cross = tensor(productW(ab.first, cd.first),
                                        productW(ab.second, cd.second));
              cross *= c * c2;
              rhs += cross;
            }
          ck.require(lhs == rhs, [&] {
            return "u = " + packedWordText(u) + ", v = " + packedWordText(v);
          });
        }
  return std::move(ck).done();
}

IdentityResult idEhrLevelMorphism(int maxN) {
  Checker ck("ehr-level-morphism");
  int bound = capped(maxN, 3);
  for (CountMode mode : {CountMode::WEAK, CountMode::STRICT}) {
    forLabeledUpTo(bound, [&](const QuasiPoset& p) {
      WordTensor lhs = coproductW(ehrMorphism(p, mode));
      WordTensor rhs;
      for (const auto& [ab, c] : coproductDelta(p).terms()) {
        WordTensor cross =
            tensor(ehrMorphism(ab.first, mode), ehrMorphism(ab.second, mode));
        cross *= c;
        rhs += cross;
      }
      ck.require(lhs == rhs, [&] { return describe(p); });
    });
    int pairBound = capped(maxN, 4);
    for (int np = 1; np < pairBound; ++np)
      for (int nq = 1; np + nq <= pairBound; ++nq)
        for (const QuasiPoset& p : labeledAll(np))
          for (const QuasiPoset& q : labeledAll(nq)) {
            bool ok = ehrMorphism(productDisjoint(p, q), mode) ==
                      productW(ehrMorphism(p, mode), ehrMorphism(q, mode));
            ck.require(ok, [&] { return describe2(p, q); });
          }
  }
  return std::move(ck).done();
}

IdentityResult idEhrInternalMorphism(int maxN) {
  Checker ck("ehr-internal-morphism");
  forLabeledUpTo(capped(maxN, 3), [&](const QuasiPoset& p) {
    WordTensor lhs = internalCoproductW(ehrMorphism(p, CountMode::STRICT));
    WordTensor rhs;
    for (const auto& [ab, c] : coproductDeltaInternal(p).terms()) {
      WordTensor cross = tensor(ehrMorphism(ab.first, CountMode::STRICT),
                                ehrMorphism(ab.second, CountMode::STRICT));
      cross *= c;
      rhs += cross;
    }
    ck.require(lhs == rhs, [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idHFactorization(int maxN) {
  Checker ck("h-factorization");
  int isoBound = capped(maxN, 4);
  for (CountMode mode : {CountMode::WEAK, CountMode::STRICT})
    forIsoUpTo(isoBound, [&](const QuasiPoset& p) {
      ck.require(hMorphism(ehrMorphism(p, mode)) == ehrPolynomial(p, mode),
                 [&] { return describe(p); });
    });
  int pairBound = capped(maxN, 4);
  for (int lu = 1; lu < pairBound; ++lu)
    for (int lv = 1; lu + lv <= pairBound; ++lv)
      for (const PackedWord& u : allPackedWords(lu))
        for (const PackedWord& v : allPackedWords(lv)) {
          bool ok = hMorphism(productW(u, v)) ==
                    hMorphism(wordBasis(u)) * hMorphism(wordBasis(v));
          ck.require(ok, [&] {
            return "u = " + packedWordText(u) + ", v = " + packedWordText(v);
          });
        }
  int wordBound = capped(maxN, 3);
  for (int len = 0; len <= wordBound; ++len)
    for (const PackedWord& w : allPackedWords(len)) {
      Polynomial whole = hMorphism(wordBasis(w));
      WordTensor split = coproductW(w);
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
          Rat rhs(0);
          for (const auto& [uv, c] : split.terms())
            rhs += c * evaluateAt(hMorphism(wordBasis(uv.first)), Rat(a)) *
                   evaluateAt(hMorphism(wordBasis(uv.second)), Rat(b));
          ck.require(evaluateAt(whole, Rat(a + b)) == rhs, [&] {
            return describeWord(w) + " at (" + std::to_string(a) + "," +
                   std::to_string(b) + ")";
          });
        }
    }
  return std::move(ck).done();
}

IdentityResult idHInternalCompat(int maxN) {
  Checker ck("h-internal-compatibility");
  int bound = capped(maxN, 3);
  for (int len = 0; len <= bound; ++len)
    for (const PackedWord& w : allPackedWords(len)) {
      Polynomial whole = hMorphism(wordBasis(w));
      WordTensor split = internalCoproductW(w);
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
          Rat rhs(0);
          for (const auto& [uv, c] : split.terms())
            rhs += c * evaluateAt(hMorphism(wordBasis(uv.first)), Rat(a)) *
                   evaluateAt(hMorphism(wordBasis(uv.second)), Rat(b));
          ck.require(evaluateAt(whole, Rat(a * b)) == rhs, [&] {
            return describeWord(w) + " at (" + std::to_string(a) + "," +
                   std::to_string(b) + ")";
          });
        }
    }
  return std::move(ck).done();
}

IdentityResult idOrdinalTransport(int maxN) {
  Checker ck("ordinal-transport");
  int bound = capped(maxN, 4);
  for (int np = 1; np < bound; ++np)
    for (int nq = 1; np + nq <= bound; ++nq)
      for (const QuasiPoset& p : labeledAll(np))
        for (const QuasiPoset& q : labeledAll(nq)) {
          QuasiPoset stacked = productOrdinal(p, q);
          bool ok =
              ehrMorphism(stacked, CountMode::STRICT) ==
                  ordinalProduct(ehrMorphism(p, CountMode::STRICT),
                                 ehrMorphism(q, CountMode::STRICT),
                                 OrdinalMode::DOWN) &&
              ehrMorphism(stacked, CountMode::WEAK) ==
                  ordinalProduct(ehrMorphism(p, CountMode::WEAK),
                                 ehrMorphism(q, CountMode::WEAK),
                                 OrdinalMode::LIGHTNING);
          ck.require(ok, [&] { return describe2(p, q); });
        }
  return std::move(ck).done();
}

IdentityResult idPhiFamily(int maxN) {
  Checker ck("phi-family");
  const std::vector<std::pair<Rat, Rat>> params = {
      {Rat(2), Rat(3)}, {Rat(-1), Rat(-1)}, {frac(1, 2), Rat(-2)}};
  int bound = capped(maxN, 3);
  for (int len = 0; len <= bound; ++len)
    for (const PackedWord& w : allPackedWords(len)) {
      WordComb unit = wordBasis(w);
      for (const auto& [a, b] : params) {
        bool ok = phiAutomorphism(phiAutomorphism(unit, b), a) ==
                  phiAutomorphism(unit, a * b);
        ck.require(ok, [&] {
          return describeWord(w) + " at (" + ratText(a) + "," + ratText(b) + ")";
        });
      }
      ck.require(phiAutomorphism(unit, Rat(1)) == unit,
                 [&] { return describeWord(w); });
    }
  return std::move(ck).done();
}

IdentityResult idWordOrderStructure(int maxN) {
  Checker ck("word-order-structure");
  int bound = capped(maxN, 4);
  // Order axioms on packed words of each length.
  int axiomBound = std::min(bound, 3);
  for (int len = 0; len <= axiomBound; ++len) {
    const auto words = allPackedWords(len);
    for (const PackedWord& a : words) {
      ck.require(wordLeq(a, a), [&] { return describeWord(a); });
      for (const PackedWord& b : words) {
        if (wordLeq(a, b) && wordLeq(b, a))
          ck.require(a == b, [&] {
            return packedWordText(a) + " and " + packedWordText(b) +
                   " compare both ways";
          });
        for (const PackedWord& c : words)
          if (wordLeq(a, b) && wordLeq(b, c))
            ck.require(wordLeq(a, c), [&] {
              return packedWordText(a) + " <= " + packedWordText(b) +
                     " <= " + packedWordText(c);
            });
      }
    }
  }
  forIsoUpTo(bound, [&](const QuasiPoset& p) {
    auto weakLevels = surjectionWords(p, CountMode::WEAK);
    auto strictLevels = surjectionWords(p, CountMode::STRICT);
    std::set<PackedWord> weakSet, strictSet;
    for (const auto& [level, ws] : weakLevels)
      weakSet.insert(ws.begin(), ws.end());
    for (const auto& [level, ws] : strictLevels)
      strictSet.insert(ws.begin(), ws.end());
    std::vector<PackedWord> ext = linearExtensions(p);
    std::set<PackedWord> extSet(ext.begin(), ext.end());

    // Maximal elements of the weak word set are exactly the extensions.
    std::set<PackedWord> maximal;
    for (const PackedWord& w : weakSet) {
      bool top = true;
      for (const PackedWord& w2 : weakSet)
        if (!(w2 == w) && wordLeq(w, w2)) {
          top = false;
          break;
        }
      if (top) maximal.insert(w);
    }
    ck.require(maximal == extSet, [&] { return describe(p); });

    // The weak word set is the union of the down-sets of the extensions.
    std::set<PackedWord> downUnion;
    for (const PackedWord& w : allPackedWords(p.n()))
      for (const PackedWord& e : ext)
        if (wordLeq(w, e)) {
          downUnion.insert(w);
          break;
        }
    ck.require(downUnion == weakSet, [&] { return describe(p); });

    // The strict word set recovers the relation.
    std::vector<PackedWord> strictWords(strictSet.begin(), strictSet.end());
    ck.require(reconstructOrder(strictWords, p.n()) == p,
               [&] { return describe(p); });
  });
  return std::move(ck).done();
}

IdentityResult idWordSurjectivity(int maxN) {
  Checker ck("word-surjectivity");
  int bound = capped(maxN, 3);
  for (int len = 0; len <= bound; ++len) {
    const auto words = allPackedWords(len);
    std::map<PackedWord, WordComb> images;
    for (const PackedWord& w : words)
      images.emplace(w, ehrMorphism(posetFromWord(w), CountMode::STRICT));
    for (const PackedWord& w : words) {
      WordComb want;
      for (const PackedWord& w2 : words)
        if (wordLeq(w, w2)) want.add(w2, Rat(1));
      ck.require(images.at(w) == want, [&] { return describeWord(w); });
    }
    // Triangular elimination: every basis word is an integer combination of
    // the strict images, so the word model is spanned by them.
    std::map<PackedWord, WordComb> expansion;
    std::function<const WordComb&(const PackedWord&)> expand =
        [&](const PackedWord& w) -> const WordComb& {
      auto it = expansion.find(w);
      if (it != expansion.end()) return it->second;
      WordComb acc = images.at(w);
      std::vector<std::pair<PackedWord, Rat>> higher(acc.terms().begin(),
                                                     acc.terms().end());
      for (const auto& [w2, c] : higher) {
        if (w2 == w || !wordLeq(w, w2)) continue;
        WordComb t = expand(w2);
        t *= c;
        acc -= t;
      }
      return expansion.emplace(w, std::move(acc)).first->second;
    };
    for (const PackedWord& w : words)
      ck.require(expand(w) == wordBasis(w), [&] { return describeWord(w); });
  }
  return std::move(ck).done();
}

// ---------------------------------------------------------------------------
// paper-tables suite: pinned values for named small cases
// ---------------------------------------------------------------------------

// The fifteen connected iso-classes with at most four vertices, in the
// fixed table order used throughout.
struct ConnectedRow {
  const char* text;
  const char* lambda;
  long pFactorial;
  const char* alpha;
};

const std::vector<ConnectedRow>& connectedTable() {
  static const std::vector<ConnectedRow> rows = {
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
  return rows;
}

Polynomial polyFrom(std::initializer_list<const char*> coeffs) {
  std::vector<Rat> cs;
  for (const char* c : coeffs) cs.push_back(parseRat(c));
  return Polynomial(cs);
}

IdentityResult idClosedFormCounts(int) {
  Checker ck("closed-form-counts");
  struct Row {
    const char* text;
    Polynomial weak;
    Polynomial strict;
  };
  const std::vector<Row> rows = {
      {"1:", polyFrom({"0", "1"}), polyFrom({"0", "1"})},
      {"2: 1<2", polyFrom({"0", "1/2", "1/2"}), polyFrom({"0", "-1/2", "1/2"})},
      {"3: 1<2 1<3", polyFrom({"0", "1/6", "1/2", "1/3"}),
       polyFrom({"0", "1/6", "-1/2", "1/3"})},
      {"3: 1<3 2<3", polyFrom({"0", "1/6", "1/2", "1/3"}),
       polyFrom({"0", "1/6", "-1/2", "1/3"})},
      {"3: 1<2 2<3", polyFrom({"0", "1/3", "1/2", "1/6"}),
       polyFrom({"0", "1/3", "-1/2", "1/6"})},
      {"2:", polyFrom({"0", "0", "1"}), polyFrom({"0", "0", "1"})},
      {"2: 1~2", polyFrom({"0", "1"}), polyFrom({"0", "1"})},
  };
  for (const Row& row : rows) {
    QuasiPoset p = parseQuasiPoset(row.text);
    bool ok = ehrPolynomial(p, CountMode::WEAK) == row.weak &&
              ehrPolynomial(p, CountMode::STRICT) == row.strict;
    ck.require(ok, [&] { return std::string("P = ") + row.text; });
  }
  return std::move(ck).done();
}

IdentityResult idLambdaTable(int) {
  Checker ck("lambda-table");
  for (const ConnectedRow& row : connectedTable()) {
    QuasiPoset p = parseQuasiPoset(row.text);
    Rat want = parseRat(row.lambda);
    bool ok = heapStats(p).lambdaValue == want && chLambda()(p) == want;
    ck.require(ok, [&] { return std::string("P = ") + row.text; });
  }
  return std::move(ck).done();
}

IdentityResult idPFactorialTable(int) {
  Checker ck("p-factorial-table");
  for (const ConnectedRow& row : connectedTable()) {
    QuasiPoset p = parseQuasiPoset(row.text);
    ck.require(heapStats(p).pFactorial == Int(row.pFactorial),
               [&] { return std::string("P = ") + row.text; });
  }
  return std::move(ck).done();
}

IdentityResult idAlphaTable(int) {
  Checker ck("alpha-table");
  for (const ConnectedRow& row : connectedTable()) {
    QuasiPoset p = parseQuasiPoset(row.text);
    ck.require(chAlpha()(p) == parseRat(row.alpha),
               [&] { return std::string("P = ") + row.text; });
  }
  return std::move(ck).done();
}

WordComb wordsFrom(std::initializer_list<const char*> ws) {
  WordComb out;
  for (const char* w : ws) out.add(parsePackedWord(w), Rat(1));
  return out;
}

IdentityResult idWordProductTable(int) {
  Checker ck("word-product-table");
  struct Row {
    const char* u;
    const char* v;
    WordComb want;
  };
  const std::vector<Row> rows = {
      {"(11)", "(11)", wordsFrom({"(1111)", "(1122)", "(2211)"})},
      {"(11)", "(12)",
       wordsFrom({"(1112)", "(1123)", "(2212)", "(2213)", "(3312)"})},
      // Five overlays: the constant block lands below, on, or between the
      // letters of the descent, including the equal-top overlap (2221).
      {"(11)", "(21)",
       wordsFrom({"(1121)", "(1132)", "(2221)", "(2231)", "(3321)"})},
      {"(12)", "(11)",
       wordsFrom({"(1211)", "(1222)", "(1233)", "(1322)", "(2311)"})},
      // Two 2-chains overlay in 13 ways: 1 with both pairs fused, 6 with one
      // cross equality, 6 with all four values distinct.
      {"(12)", "(12)",
       wordsFrom({"(1212)", "(1213)", "(1223)", "(1234)", "(1312)", "(1323)",
                  "(1324)", "(1423)", "(2312)", "(2313)", "(2314)", "(2413)",
                  "(3412)"})},
      {"(12)", "(21)",
       wordsFrom({"(1221)", "(1231)", "(1232)", "(1243)", "(1321)", "(1332)",
                  "(1342)", "(1432)", "(2321)", "(2331)", "(2341)", "(2431)",
                  "(3421)"})},
  };
  for (const Row& row : rows) {
    bool ok = productW(parsePackedWord(row.u), parsePackedWord(row.v)) == row.want;
    ck.require(ok, [&] {
      return std::string(row.u) + " * " + row.v;
    });
  }
  return std::move(ck).done();
}

IdentityResult idWordCoproductTable(int) {
  Checker ck("word-coproduct-table");
  struct Row {
    const char* w;
    std::vector<std::pair<const char*, const char*>> terms;
  };
  const std::vector<Row> rows = {
      {"(111)", {{"(111)", "()"}, {"()", "(111)"}}},
      {"(212)", {{"(212)", "()"}, {"(1)", "(11)"}, {"()", "(212)"}}},
      {"(312)", {{"(312)", "()"}, {"(1)", "(21)"}, {"(12)", "(1)"}, {"()", "(312)"}}},
  };
  for (const Row& row : rows) {
    WordTensor want;
    for (const auto& [a, b] : row.terms)
      want.add({parsePackedWord(a), parsePackedWord(b)}, Rat(1));
    ck.require(coproductW(parsePackedWord(row.w)) == want,
               [&] { return std::string("w = ") + row.w; });
  }
  return std::move(ck).done();
}

IdentityResult idWordInternalTable(int) {
  Checker ck("word-internal-table");
  struct Row {
    const char* w;
    std::vector<std::pair<const char*, const char*>> terms;
  };
  const std::vector<Row> rows = {
      {"(11)", {{"(11)", "(11)"}}},
      {"(12)", {{"(12)", "(11)"}, {"(12)", "(12)"}, {"(12)", "(21)"}, {"(11)", "(12)"}}},
      {"(21)", {{"(21)", "(11)"}, {"(21)", "(12)"}, {"(21)", "(21)"}, {"(11)", "(21)"}}},
  };
  for (const Row& row : rows) {
    WordTensor want;
    for (const auto& [a, b] : row.terms)
      want.add({parsePackedWord(a), parsePackedWord(b)}, Rat(1));
    ck.require(internalCoproductW(parsePackedWord(row.w)) == want,
               [&] { return std::string("w = ") + row.w; });
  }
  return std::move(ck).done();
}

IdentityResult idWordCountExamples(int) {
  Checker ck("word-count-examples");
  struct Row {
    const char* text;
    WordComb weak;
    WordComb strict;
  };
  const std::vector<Row> rows = {
      {"1:", wordsFrom({"(1)"}), wordsFrom({"(1)"})},
      {"2: 1<2", wordsFrom({"(11)", "(12)"}), wordsFrom({"(12)"})},
      {"2: 2<1", wordsFrom({"(11)", "(21)"}), wordsFrom({"(21)"})},
      {"2:", wordsFrom({"(11)", "(12)", "(21)"}),
       wordsFrom({"(11)", "(12)", "(21)"})},
      {"2: 1~2", wordsFrom({"(11)"}), wordsFrom({"(11)"})},
  };
  for (const Row& row : rows) {
    QuasiPoset p = parseQuasiPoset(row.text);
    bool ok = ehrMorphism(p, CountMode::WEAK) == row.weak &&
              ehrMorphism(p, CountMode::STRICT) == row.strict;
    ck.require(ok, [&] { return std::string("P = ") + row.text; });
  }

  QuasiPoset v = parseQuasiPoset("3: 1<2 1<3");
  ck.require(ehrMorphism(v, CountMode::WEAK) ==
                 wordsFrom({"(111)", "(112)", "(121)", "(122)", "(123)", "(132)"}),
             [] { return std::string("weak words of the 3-fork"); });
  ck.require(ehrMorphism(v, CountMode::STRICT) ==
                 wordsFrom({"(122)", "(123)", "(132)"}),
             [] { return std::string("strict words of the 3-fork"); });
  std::vector<PackedWord> ext = linearExtensions(v);
  ck.require(std::set<PackedWord>(ext.begin(), ext.end()) ==
                 std::set<PackedWord>(
                     {parsePackedWord("(123)"), parsePackedWord("(132)")}),
             [] { return std::string("extensions of the 3-fork"); });
  ck.require(linearExtensions(parseQuasiPoset("4: 1<3 2<3 2<4")).size() == 5,
             [] { return std::string("extension count of the zigzag"); });
  return std::move(ck).done();
}

IdentityResult idCoproductExamples(int) {
  Checker ck("coproduct-examples");
  auto qp = [](const char* t) { return parseQuasiPoset(t); };
  QuasiPoset pt = qp("1:");
  QuasiPoset c2 = qp("2: 1<2");
  QuasiPoset a2 = qp("2:");
  QuasiPoset b2 = qp("2: 1~2");
  QuasiPoset v = qp("3: 1<2 1<3");
  QuasiPoset wedge = qp("3: 1<3 2<3");
  QuasiPoset c3 = qp("3: 1<2 2<3");
  QuasiPoset a3 = qp("3:");
  QuasiPoset empty = qp("0:");

  {
    QPTensor want;
    want.add({pt, empty}, Rat(1));
    want.add({empty, pt}, Rat(1));
    ck.require(coproductDelta(pt) == want, [] { return std::string("Delta(point)"); });
  }
  {
    QPTensor want;
    want.add({c2, empty}, Rat(1));
    want.add({empty, c2}, Rat(1));
    want.add({pt, pt}, Rat(1));
    ck.require(coproductDelta(c2) == want, [] { return std::string("Delta(2-chain)"); });
  }
  {
    QPTensor want;
    want.add({v, empty}, Rat(1));
    want.add({empty, v}, Rat(1));
    want.add({c2, pt}, Rat(2));
    want.add({pt, a2}, Rat(1));
    ck.require(coproductDelta(v) == want, [] { return std::string("Delta(fork)"); });
  }
  {
    QPTensor want;
    want.add({wedge, empty}, Rat(1));
    want.add({empty, wedge}, Rat(1));
    want.add({a2, pt}, Rat(1));
    want.add({pt, c2}, Rat(2));
    ck.require(coproductDelta(wedge) == want, [] { return std::string("Delta(wedge)"); });
  }
  {
    QPTensor want;
    want.add({c3, empty}, Rat(1));
    want.add({empty, c3}, Rat(1));
    want.add({c2, pt}, Rat(1));
    want.add({pt, c2}, Rat(1));
    ck.require(coproductDelta(c3) == want, [] { return std::string("Delta(3-chain)"); });
  }

  {
    QPTensor want;
    want.add({pt, pt}, Rat(1));
    ck.require(coproductDeltaInternal(pt) == want,
               [] { return std::string("delta(point)"); });
  }
  {
    QPTensor want;
    want.add({c2, a2}, Rat(1));
    want.add({b2, c2}, Rat(1));
    ck.require(coproductDeltaInternal(c2) == want,
               [] { return std::string("delta(2-chain)"); });
  }
  {
    QPTensor want;
    want.add({a2, a2}, Rat(1));
    ck.require(coproductDeltaInternal(a2) == want,
               [] { return std::string("delta(2-antichain)"); });
  }
  {
    // Blocks must be connected and closed under the contracted relation:
    // the 3-chain admits exactly four compatible equivalences.
    QuasiPoset low = fromGenerators(3, {{1, 2, GenKind::EQUIV},
                                        {1, 3, GenKind::LE}});
    QuasiPoset high = fromGenerators(3, {{2, 3, GenKind::EQUIV},
                                         {1, 2, GenKind::LE}});
    QuasiPoset all3 = fromGenerators(3, {{1, 2, GenKind::EQUIV},
                                         {2, 3, GenKind::EQUIV}});
    QuasiPoset lowRest = fromGenerators(3, {{1, 2, GenKind::LE}});
    QuasiPoset highRest = fromGenerators(3, {{2, 3, GenKind::LE}});
    QPTensor want;
    want.add({c3, a3}, Rat(1));
    want.add({low, lowRest}, Rat(1));
    want.add({high, highRest}, Rat(1));
    want.add({all3, c3}, Rat(1));
    ck.require(coproductDeltaInternal(c3) == want,
               [] { return std::string("delta(3-chain)"); });
  }
  ck.require(compatibleEquivalences(c2).size() == 2,
             [] { return std::string("compatible count of the 2-chain"); });
  ck.require(compatibleEquivalences(c3).size() == 4,
             [] { return std::string("compatible count of the 3-chain"); });
  ck.require(compatibleEquivalences(a2).size() == 1,
             [] { return std::string("compatible count of the 2-antichain"); });
  ck.require(compatibleEquivalences(b2).size() == 1,
             [] { return std::string("compatible count of the glued pair"); });
  ck.require(coproductDeltaInternal(v).size() == 4,
             [] { return std::string("delta(fork) term count"); });

  {
    QPComb want;
    want.add(c2, Rat(1));
    want.add(b2, Rat(1));
    ck.require(theta(qpBasis(c2)) == want, [] { return std::string("theta(2-chain)"); });
  }
  {
    QPComb want;
    want.add(pt, Rat(-1));
    ck.require(antipode(pt) == want, [] { return std::string("S(point)"); });
  }
  {
    QPComb want;
    want.add(c2, Rat(-1));
    want.add(a2, Rat(1));
    ck.require(antipode(c2) == want, [] { return std::string("S(2-chain)"); });
  }
  ck.require(morphismFromCharacter(c2, chEpsPrime()) == polyFrom({"0", "0", "1/2"}),
             [] { return std::string("leading-term morphism on the 2-chain"); });
  return std::move(ck).done();
}

IdentityResult idEnumerationCounts(int) {
  Checker ck("enumeration-counts");
  const std::vector<size_t> labeledQP = {1, 1, 4, 29, 355};
  const std::vector<size_t> labeledPosets = {1, 1, 3, 19, 219};
  const std::vector<size_t> isoQP = {1, 1, 3, 9, 33};
  const std::vector<size_t> isoP = {1, 1, 2, 5, 16};
  const std::vector<size_t> isoConnP = {1, 1, 1, 3, 10};
  for (int n = 0; n <= 4; ++n) {
    ck.require(labeledAll(n).size() == labeledQP[n],
               [&] { return "labeled quasi-posets on " + std::to_string(n); });
    ck.require(enumerateLabeled(n, true).size() == labeledPosets[n],
               [&] { return "labeled posets on " + std::to_string(n); });
    ck.require(isoAll(n).size() == isoQP[n],
               [&] { return "iso quasi-posets on " + std::to_string(n); });
    ck.require(isoPosets(n).size() == isoP[n],
               [&] { return "iso posets on " + std::to_string(n); });
    ck.require(enumerateConnectedIsoReps(n, true).size() == isoConnP[n],
               [&] { return "connected iso posets on " + std::to_string(n); });
  }
  return std::move(ck).done();
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

struct SuiteDef {
  const char* name;
  std::vector<IdentityResult (*)(int)> identities;
};

const std::vector<SuiteDef>& suiteDefs() {
  static const std::vector<SuiteDef> defs = {
      {"hopf",
       {idDeltaCoassoc, idDeltaInternalCoassoc, idDeltaMultiplicative,
        idDeltaInternalMultiplicative, idCounitLevel, idCounitInternal,
        idAntipodeConvolution, idIsoDescent, idEhrHopfMorphism,
        idMapCountOracle, idPathAgreement, idQuotientInvariance}},
      {"cointeraction",
       {idCointeractionAxiom, idAntipodeComodule, idPhiComposition,
        idThetaBijective}},
      {"duality",
       {idClassicalDuality, idBoundaryValues, idNoncommutativeDuality,
        idPhiMinusOneInvolution, idOrdinalExchange, idThetaTransportPoly,
        idThetaTransportWords}},
      {"characters",
       {idConvolutionMonoid, idLambdaStrictInverse, idBetaAlphaInverse,
        idAlphaSign, idIotaFactorization, idMorphismReconstruction,
        idMorphismNormalization, idLambdaSymmetry, idForestDichotomy,
        idBernoulliRecurrence, idBernoulliCorolla, idFaulhaberSums}},
      {"wqsym",
       {idWordProductOracle, idLevelBialgebra, idInternalBialgebra,
        idEhrLevelMorphism, idEhrInternalMorphism, idHFactorization,
        idHInternalCompat, idOrdinalTransport, idPhiFamily,
        idWordOrderStructure, idWordSurjectivity}},
      {"paper-tables",
       {idClosedFormCounts, idLambdaTable, idPFactorialTable, idAlphaTable,
        idWordProductTable, idWordCoproductTable, idWordInternalTable,
        idWordCountExamples, idCoproductExamples, idEnumerationCounts}},
  };
  return defs;
}

}  // namespace

bool SuiteReport::allPass() const {
  for (const IdentityResult& r : identities)
    if (!r.pass) return false;
  return true;
}

long SuiteReport::totalCases() const {
  long total = 0;
  for (const IdentityResult& r : identities) total += r.cases;
  return total;
}

SuiteReport runSuite(const std::string& name, int maxN) {
  SuiteReport report;
  report.suite = name;
  if (name == "all") {
    for (const SuiteDef& def : suiteDefs())
      for (auto fn : def.identities) report.identities.push_back(fn(maxN));
    return report;
  }
  for (const SuiteDef& def : suiteDefs())
    if (name == def.name) {
      for (auto fn : def.identities) report.identities.push_back(fn(maxN));
      return report;
    }
  throw InputError("unknown verification suite: " + name);
}

std::vector<std::string> suiteNames() {
  std::vector<std::string> names;
  for (const SuiteDef& def : suiteDefs()) names.emplace_back(def.name);
  names.emplace_back("all");
  return names;
}

}  // namespace qpehr
