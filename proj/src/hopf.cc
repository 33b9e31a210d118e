#include "qpehr/hopf.hh"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace qpehr {

QPComb productQP(const QPComb& x, const QPComb& y) {
  QPComb out;
  for (const auto& [p, cp] : x.terms())
    for (const auto& [q, cq] : y.terms()) out.add(productDisjoint(p, q), cp * cq);
  return out;
}

QPTensor coproductDelta(const QuasiPoset& p) {
  QPTensor out;
  uint32_t full = p.n() == 0 ? 0 : (1u << p.n()) - 1;
  for (uint32_t open : openSets(p))
    out.add({restrict(p, full & ~open), restrict(p, open)}, Rat(1));
  return out;
}

QPTensor coproductDelta(const QPComb& x) {
  return applyLinearly(x, [](const QuasiPoset& p) { return coproductDelta(p); });
}

QPTensor coproductDeltaInternal(const QuasiPoset& p) {
  QPTensor out;
  for (const Equivalence& eq : compatibleEquivalences(p))
    out.add({contract(p, eq), restrictByEq(p, eq)}, Rat(1));
  return out;
}

QPTensor coproductDeltaInternal(const QPComb& x) {
  return applyLinearly(x, [](const QuasiPoset& p) { return coproductDeltaInternal(p); });
}

CoactionComb coaction(const QuasiPoset& p) {
  CoactionComb out;
  for (const Equivalence& eq : compatibleEquivalences(p))
    out.add({contract(p, eq), canonicalKey(restrictByEq(p, eq))}, Rat(1));
  return out;
}

CoactionComb coaction(const QPComb& x) {
  return applyLinearly(x, [](const QuasiPoset& p) { return coaction(p); });
}

Rat counit(const QPComb& x, CounitMode mode) {
  Rat total = 0;
  for (const auto& [p, c] : x.terms()) {
    if (mode == CounitMode::EPS ? p.n() == 0 : !hasStrictPair(p)) total += c;
  }
  return total;
}

namespace {
std::map<QuasiPoset, QPComb>& antipodeCache() {
  static std::map<QuasiPoset, QPComb> cache;
  return cache;
}
std::shared_mutex& antipodeMutex() {
  static std::shared_mutex mu;
  return mu;
}
}  // namespace

QPComb antipode(const QuasiPoset& p) {
  if (p.n() == 0) return qpBasis(p);
  {
    std::shared_lock lock(antipodeMutex());
    auto it = antipodeCache().find(p);
    if (it != antipodeCache().end()) return it->second;
  }
  // m(S x Id)Delta = 0 in positive degree, solved for the O = empty term.
  uint32_t full = (1u << p.n()) - 1;
  QPComb result;
  result.add(p, Rat(-1));
  for (uint32_t open : openSets(p)) {
    if (open == 0 || open == full) continue;
    result -= productQP(antipode(restrict(p, full & ~open)), qpBasis(restrict(p, open)));
  }
  std::unique_lock lock(antipodeMutex());
  return antipodeCache().emplace(p, std::move(result)).first->second;
}

QPComb antipode(const QPComb& x) {
  return applyLinearly(x, [](const QuasiPoset& p) { return antipode(p); });
}

QPComb phiEndomorphism(const QPComb& x, const Character& chi) {
  return applyLinearly(x, [&chi](const QuasiPoset& p) {
    QPComb out;
    for (const Equivalence& eq : compatibleEquivalences(p))
      out.add(contract(p, eq), chi(restrictByEq(p, eq)));
    return out;
  });
}

QPComb theta(const QPComb& x) {
  static const Character iota = builtinCharacter(BuiltinChar::IOTA);
  return phiEndomorphism(x, iota);
}

QPComb thetaInverse(const QPComb& x) {
  static const Character iotaInverse = inverseCharacter(builtinCharacter(BuiltinChar::IOTA));
  return phiEndomorphism(x, iotaInverse);
}

QPComb psi(const QPComb& x) {
  QPComb out;
  for (const auto& [p, c] : x.terms()) {
    int cl = quotient(p).cl;
    out.add(p, cl % 2 == 0 ? c : -c);
  }
  return out;
}

LinComb<CanonicalKey> isoClasses(const QPComb& x) {
  LinComb<CanonicalKey> out;
  for (const auto& [p, c] : x.terms()) out.add(canonicalKey(p), c);
  return out;
}

LinComb<std::pair<CanonicalKey, CanonicalKey>> isoClasses(const QPTensor& x) {
  LinComb<std::pair<CanonicalKey, CanonicalKey>> out;
  for (const auto& [pq, c] : x.terms())
    out.add({canonicalKey(pq.first), canonicalKey(pq.second)}, c);
  return out;
}

CanonicalKey productKeys(const CanonicalKey& a, const CanonicalKey& b) {
  return canonicalKey(productDisjoint(decodeKey(a), decodeKey(b)));
}

}  // namespace qpehr
