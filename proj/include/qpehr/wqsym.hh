// The bialgebra of packed words: quasi-shuffle product, level-split
// coproduct, internal coproduct, ordinal products, the word-valued counting
// morphisms from quasi-posets, the Phi_lambda family, the specialization to
// polynomials, the word order, and the poset attached to a word.
#pragma once

#include <utility>

#include "qpehr/ehrhart.hh"
#include "qpehr/lincomb.hh"
#include "qpehr/packedword.hh"
#include "qpehr/polynomial.hh"
#include "qpehr/quasiposet.hh"

namespace qpehr {

using WordComb = LinComb<PackedWord>;
using WordTensor = LinComb<std::pair<PackedWord, PackedWord>>;

inline WordComb wordBasis(const PackedWord& w) { return WordComb::basis(w); }

// Concatenate and overlay the value axes: sum over all words whose first
// |u| letters pack to u and last |v| letters pack to v.
WordComb productW(const PackedWord& u, const PackedWord& v);
WordComb productW(const WordComb& x, const WordComb& y);

// Split at each letter level k: letters <= k tensor the packed high part.
WordTensor coproductW(const PackedWord& w);
WordTensor coproductW(const WordComb& x);

// Sum of (sigma . w) tensor (tau . w) over pairs where sigma is a
// non-decreasing packed word of length max(w) and tau is packed and strictly
// increasing inside each sigma-fiber.
WordTensor internalCoproductW(const PackedWord& w);
WordTensor internalCoproductW(const WordComb& x);

enum class OrdinalMode {
  DOWN,       // concatenate, shifting the right word above the left
  STAR,       // concatenate, fusing the right word's lowest level into max(u)
  LIGHTNING,  // sum of both
};
WordComb ordinalProduct(const PackedWord& u, const PackedWord& v, OrdinalMode mode);
WordComb ordinalProduct(const WordComb& x, const WordComb& y, OrdinalMode mode);

// Sum of all surjective (weak or strict) order-preserving words of P.
WordComb ehrMorphism(const QuasiPoset& p, CountMode mode);
WordComb ehrMorphism(const LinComb<QuasiPoset>& x, CountMode mode);

// Phi_lambda(w) = sum over non-decreasing surjections sigma from [max(w)]
// of (product of H_(fiber size)(lambda)) sigma . w. Phi_1 = Id; Phi_-1 is
// the sign-twisted involution exchanging the weak and strict images.
WordComb phiAutomorphism(const WordComb& x, const Rat& lambda);

// w -> H_max(w)(X); collapses the word model onto counting polynomials.
Polynomial hMorphism(const WordComb& x);

// Counit of the level-split coproduct: coefficient of the empty word.
Rat counitW(const WordComb& x);
// Counit of the internal coproduct: total coefficient of constant words.
Rat counitInternalW(const WordComb& x);

// w <= w2 iff every strict letter inequality of w holds in w2 (same length).
bool wordLeq(const PackedWord& a, const PackedWord& b);

// i <= j iff i = j or w(i) < w(j); its strict words are the up-set of w.
QuasiPoset posetFromWord(const PackedWord& w);

}  // namespace qpehr
