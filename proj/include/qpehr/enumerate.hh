// Exhaustive enumeration of labeled quasi-posets / posets on {1..n} and of
// their iso-classes. The labeled scan walks all off-diagonal bit patterns and
// keeps the transitively closed ones; it exists in a serial reference version
// and an OpenMP-partitioned version with identical output.
#pragma once

#include <vector>

#include "qpehr/quasiposet.hh"

namespace qpehr {

// Ascending relation-bit order; posetsOnly additionally filters antisymmetry.
std::vector<QuasiPoset> enumerateLabeledSerial(int n, bool posetsOnly);
std::vector<QuasiPoset> enumerateLabeled(int n, bool posetsOnly);

// One canonical representative per iso-class, sorted by canonical key.
std::vector<QuasiPoset> enumerateIsoReps(int n, bool posetsOnly);
std::vector<CanonicalKey> enumerateIsoKeys(int n, bool posetsOnly);

// Iso-class representatives with a connected comparability graph.
std::vector<QuasiPoset> enumerateConnectedIsoReps(int n, bool posetsOnly);

}  // namespace qpehr
