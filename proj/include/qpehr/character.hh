// Characters of the extraction-contraction bialgebra: rational-valued maps
// multiplicative for the disjoint union, forming a monoid under the
// convolution (a*b)(P) = sum over compatible equivalences of
// a(P/~) b(P|~). Includes the named characters, convolution inverses, and
// the reconstruction of counting polynomials from characters.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "qpehr/polynomial.hh"
#include "qpehr/quasiposet.hh"

namespace qpehr {

class Character;

// Value on a connected canonical representative. `self` names the character
// being defined, so triangular recursions (convolution inverses) can call
// back into their own memo.
using ConnectedRule = std::function<Rat(const QuasiPoset&, const Character&)>;

// Determined by its values on connected iso-classes; evaluation splits the
// argument into connected components and multiplies. Values are memoized per
// canonical key behind a shared mutex, so concurrent evaluation is safe.
class Character {
 public:
  Character(std::string name, ConnectedRule onConnected);

  Rat operator()(const QuasiPoset& p) const;
  const std::string& name() const;

  // Memo import/export for the persistent CLI cache.
  std::map<CanonicalKey, Rat> memoSnapshot() const;
  void seedMemo(const CanonicalKey& key, const Rat& value) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

enum class BuiltinChar { EPS_PRIME, IOTA, LAMBDA, ALPHA, ALPHA_STR, BETA };

// eps-prime: 1 exactly on quasi-posets with no strict pair (convolution
//            unit);
// iota:      constantly 1;
// lambda:    heap-orderings of the quotient over cl!;
// alpha:     X-coefficient of the weak count polynomial;
// alpha-str: X-coefficient of the strict count polynomial;
// beta:      (-1)^(cl+cc) lambda, the convolution inverse of alpha.
Character builtinCharacter(BuiltinChar which);
Character builtinCharacter(const std::string& name);

Character convolve(const Character& a, const Character& b);

// Convolution inverse, solved triangularly over compatible equivalences;
// requires nonzero values on the single-class elements.
Character inverseCharacter(const Character& a);

// Sum over compatible equivalences of lambda(P/~) chi(P|~) X^(blocks of ~).
// chi = alpha reproduces the weak count polynomial, alpha-str the strict
// one, eps-prime the leading term lambda_P X^cl.
Polynomial morphismFromCharacter(const QuasiPoset& p, const Character& chi);

// Extensional equality on (connected) iso-classes with at most maxN vertices.
bool charactersAgree(const Character& a, const Character& b, int maxN,
                     bool connectedOnly = true);

}  // namespace qpehr
