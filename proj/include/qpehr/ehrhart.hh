// Counting order-preserving maps [n] -> [k] of a quasi-poset, weakly or
// strictly, three ways: a brute-force scan over all k^n maps (the oracle),
// surjection counts assembled in the binomial basis, and the open-set
// recursion through the summation operator L. Plus heap-ordering statistics,
// linear extensions, order reconstruction from strict words, and the
// Bernoulli/Faulhaber specialization on corollas.
#pragma once

#include <map>
#include <vector>

#include "qpehr/packedword.hh"
#include "qpehr/polynomial.hh"
#include "qpehr/quasiposet.hh"

namespace qpehr {

enum class CountMode { WEAK, STRICT };

// Brute-force count over all k^n vertex maps; guards k^n <= 10^8. The
// default version splits the scan over the first vertex's value when
// OpenMP is available; the serial version is the reference.
Int countMaps(const QuasiPoset& p, int k, CountMode mode);
Int countMapsSerial(const QuasiPoset& p, int k, CountMode mode);

// W_P(i) (or the strict variant) for 1 <= i <= cl(P), as packed words of
// length n: the surjective order-preserving maps onto [i]. Index 0 carries
// the empty word when P is empty.
std::map<int, std::vector<PackedWord>> surjectionWords(const QuasiPoset& p, CountMode mode);

// Sum of |W_P(i)| H_i(X); degree cl(P). Memoized per iso-class.
Polynomial ehrPolynomial(const QuasiPoset& p, CountMode mode);

// Independent path: ehr_P = L(sum over nonempty open O of ehr of the closed
// complement); the strict sum keeps only O whose restriction has no strict
// pair. Memoized per iso-class.
Polynomial ehrRecursive(const QuasiPoset& p, CountMode mode);

struct HeapStats {
  Int mu;          // order-preserving bijections from the quotient to a chain
  Int pFactorial;  // product of up-set sizes over quotient classes
  Rat lambdaValue; // mu / cl!
};

HeapStats heapStats(const QuasiPoset& p);

// No two incomparable quotient classes share an upper bound; exactly the
// shapes where lambdaValue * pFactorial = 1.
bool quotientIsForest(const QuasiPoset& p);

// Strict surjections onto [cl(P)]: fibers are exactly the vertex classes.
std::vector<PackedWord> linearExtensions(const QuasiPoset& p);

// The coarsest quasi-poset every word weakly respects: i <= j iff w(i) <= w(j)
// for all given words. Inverse of surjectionWords on strict word sets.
QuasiPoset reconstructOrder(const std::vector<PackedWord>& words, int n);

// One minimum below k incomparable maxima (k = 0: a single point).
QuasiPoset corolla(int k);

// Coefficient of X in the strict count polynomial of the corolla; the
// convention with bernoulli(1) = -1/2.
Rat bernoulli(int k);

// Power-sum polynomial S_k with S_k(n) = 1^k + ... + (n-1)^k for n >= 1.
Polynomial faulhaber(int k);

}  // namespace qpehr
