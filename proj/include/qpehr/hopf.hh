// The two coproducts on linear combinations of labeled quasi-posets, their
// counits, the antipode of the vertex-graded structure, the coaction with
// iso-class right legs, and the endomorphisms built from characters
// (theta and its inverse as the flagship pair).
#pragma once

#include <tuple>
#include <utility>

#include "qpehr/character.hh"
#include "qpehr/lincomb.hh"
#include "qpehr/quasiposet.hh"

namespace qpehr {

using QPComb = LinComb<QuasiPoset>;
using QPTensor = LinComb<std::pair<QuasiPoset, QuasiPoset>>;
using QPTensor3 = LinComb<std::tuple<QuasiPoset, QuasiPoset, QuasiPoset>>;
using CoactionComb = LinComb<std::pair<QuasiPoset, CanonicalKey>>;

inline QPComb qpBasis(const QuasiPoset& p) { return QPComb::basis(p); }

// Disjoint union, extended bilinearly; the algebra product on both gradings.
QPComb productQP(const QPComb& x, const QPComb& y);

// Open-set coproduct: closed complement tensor open part, standardized.
QPTensor coproductDelta(const QuasiPoset& p);
QPTensor coproductDelta(const QPComb& x);

// Extraction-contraction coproduct: P/~ tensor P|~ over compatible
// equivalences; both legs keep the vertex set {1..n}.
QPTensor coproductDeltaInternal(const QuasiPoset& p);
QPTensor coproductDeltaInternal(const QPComb& x);

// Extraction-contraction with the right leg reduced to its iso-class.
CoactionComb coaction(const QuasiPoset& p);
CoactionComb coaction(const QPComb& x);

enum class CounitMode {
  EPS,        // coefficient of the empty quasi-poset (counit of Delta)
  EPS_PRIME,  // total coefficient of elements with no strict pair
};
Rat counit(const QPComb& x, CounitMode mode);

// Antipode of the vertex-graded connected structure, by the usual degree
// recursion over the reduced open-set coproduct. Memoized.
QPComb antipode(const QuasiPoset& p);
QPComb antipode(const QPComb& x);

// Sum over compatible equivalences of chi(P|~) P/~; a bialgebra endomorphism
// for every character chi, invertible iff chi never vanishes on single-class
// elements.
QPComb phiEndomorphism(const QPComb& x, const Character& chi);

// phiEndomorphism with iota (sum of all contractions) and with iota's
// convolution inverse.
QPComb theta(const QPComb& x);
QPComb thetaInverse(const QPComb& x);

// Sign map P -> (-1)^cl(P) P; conjugates the weak and strict theories.
QPComb psi(const QPComb& x);

// Projections to iso-class labels, for identity checks that live downstream
// of relabeling.
LinComb<CanonicalKey> isoClasses(const QPComb& x);
LinComb<std::pair<CanonicalKey, CanonicalKey>> isoClasses(const QPTensor& x);

// Iso-class of the disjoint union of two iso-classes.
CanonicalKey productKeys(const CanonicalKey& a, const CanonicalKey& b);

}  // namespace qpehr
