// Finite quasi-posets (preorders) on {1..n}: representation, closure,
// quotient structure, restriction, products, canonical forms, and the
// text grammar `n: i<j i~k ...`.
//
// The relation is stored closed (reflexive and transitive), one bitmask row
// per vertex, so value equality is relation equality.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpehr/rational.hh"

namespace qpehr {

constexpr int kMaxVertices = 31;

class QuasiPoset {
 public:
  QuasiPoset() : n_(0) {}
  // rows must already be reflexive-transitive; use fromGenerators otherwise.
  QuasiPoset(int n, std::vector<uint32_t> rows);

  int n() const { return n_; }
  bool leq(int i, int j) const { return (rows_[i - 1] >> (j - 1)) & 1u; }
  bool equiv(int i, int j) const { return leq(i, j) && leq(j, i); }
  bool strictlyLess(int i, int j) const { return leq(i, j) && !leq(j, i); }
  uint32_t row(int i) const { return rows_[i - 1]; }
  const std::vector<uint32_t>& rows() const { return rows_; }

  bool isDiscrete() const;  // every related pair is equivalent

  friend bool operator==(const QuasiPoset& a, const QuasiPoset& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend auto operator<=>(const QuasiPoset& a, const QuasiPoset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  int n_;
  std::vector<uint32_t> rows_;  // rows_[i] bit j: (i+1) <= (j+1)
};

enum class GenKind { LE, EQUIV };

struct Generator {
  int i;
  int j;
  GenKind kind;
};

// Smallest reflexive-transitive relation containing the generators;
// EQUIV(i,j) contributes both i<=j and j<=i.
QuasiPoset fromGenerators(int n, const std::vector<Generator>& gens);

// Set partition of {1..n}; blocks sorted internally and by least element.
struct Equivalence {
  std::vector<std::vector<int>> blocks;

  int classCount() const { return static_cast<int>(blocks.size()); }
  int blockOf(int v) const;  // index into blocks
  bool sameBlock(int a, int b) const { return blockOf(a) == blockOf(b); }
  void normalize();

  friend bool operator==(const Equivalence&, const Equivalence&) = default;
};

// All set partitions of {1..n} in restricted-growth-string order.
std::vector<Equivalence> allSetPartitions(int n);

// The poset of equivalence classes of a quasi-poset.
struct QuotientView {
  std::vector<std::vector<int>> classes;  // sorted blocks, by least element
  std::vector<uint32_t> order;            // order[a] bit b: class a <= class b
  int cl = 0;
  int cc = 0;

  bool leqClass(int a, int b) const { return (order[a] >> b) & 1u; }
};

QuotientView quotient(const QuasiPoset& p);

// Connected components of the comparability graph, each a sorted vertex list,
// ordered by least element.
std::vector<std::vector<int>> connectedComponents(const QuasiPoset& p);

// All up-closed vertex subsets as bitmasks, sorted by (popcount, value).
// Iterates up-sets of the quotient poset and expands classes.
std::vector<uint32_t> openSets(const QuasiPoset& p);

// Standardized restriction to the vertices of mask (relabeled 1..|mask| by
// the increasing bijection).
QuasiPoset restrict(const QuasiPoset& p, uint32_t mask);

QuasiPoset productDisjoint(const QuasiPoset& p, const QuasiPoset& q);
QuasiPoset productOrdinal(const QuasiPoset& p, const QuasiPoset& q);

QuasiPoset opposite(const QuasiPoset& p);

// True when i <= j holds but j <= i does not, for some pair; equivalently
// the quotient order is not an antichain.
bool hasStrictPair(const QuasiPoset& p);

// Contraction p/~ on the same vertex set: closure of rel union eq.
QuasiPoset contract(const QuasiPoset& p, const Equivalence& eq);
// Restriction p|~ on the same vertex set: rel intersected with eq.
QuasiPoset restrictByEq(const QuasiPoset& p, const Equivalence& eq);

// Blocks connected and the contraction's class partition equals eq itself.
bool isCompatible(const QuasiPoset& p, const Equivalence& eq);
std::vector<Equivalence> compatibleEquivalences(const QuasiPoset& p);

// Iso-class key: byte 0 is n, then the row-major bits of the minimal
// relabeling. Equal keys iff a relation-preserving bijection exists.
using CanonicalKey = std::string;

struct CanonicalForm {
  CanonicalKey key;
  QuasiPoset representative;
};

CanonicalForm canonicalForm(const QuasiPoset& p);
CanonicalKey canonicalKey(const QuasiPoset& p);
QuasiPoset decodeKey(const CanonicalKey& key);
std::string keyHex(const CanonicalKey& key);
CanonicalKey keyFromHex(const std::string& hex);

// Text grammar: `INT ':' (INT('<'|'~')INT)*`, e.g. "3: 1<2 1<3".
QuasiPoset parseQuasiPoset(const std::string& text);
// Quotient covering relations plus `~` generators per class, sorted.
std::string quasiPosetText(const QuasiPoset& p);

}  // namespace qpehr
