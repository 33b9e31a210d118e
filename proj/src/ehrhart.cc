#include "qpehr/ehrhart.hh"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace qpehr {

namespace {

// Comparability pairs needed by the map check, precomputed once per poset.
struct EdgeLists {
  std::vector<std::pair<int, int>> weak;    // i <= j, i != j: need f(i) <= f(j)
  std::vector<std::pair<int, int>> strict;  // i < j: need f(i) < f(j)
};

EdgeLists edgeLists(const QuasiPoset& p) {
  EdgeLists e;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = 1; j <= p.n(); ++j) {
      if (i == j || !p.leq(i, j)) continue;
      e.weak.emplace_back(i, j);
      if (!p.leq(j, i)) e.strict.emplace_back(i, j);
    }
  return e;
}

bool mapOk(const std::vector<int>& f, const EdgeLists& e, CountMode mode) {
  for (auto [i, j] : e.weak)
    if (f[i - 1] > f[j - 1]) return false;
  if (mode == CountMode::STRICT)
    for (auto [i, j] : e.strict)
      if (f[i - 1] >= f[j - 1]) return false;
  return true;
}

// Counts maps with the first coordinate pinned; odometer over the rest.
Int countMapsPinned(const QuasiPoset& p, int k, CountMode mode, const EdgeLists& e, int first) {
  int n = p.n();
  std::vector<int> f(n, 1);
  f[0] = first;
  Int total = 0;
  while (true) {
    if (mapOk(f, e, mode)) ++total;
    int i = n - 1;
    while (i >= 1 && f[i] == k) {
      f[i] = 1;
      --i;
    }
    if (i < 1) break;
    ++f[i];
  }
  return total;
}

void guardCapacity(int n, int k) {
  double cost = 1;
  for (int i = 0; i < n; ++i) {
    cost *= k;
    if (cost > 1e8) throw CapacityError("map count k^n exceeds 10^8");
  }
}

// Minimal classes of the induced sub-poset on mask.
uint32_t minimaMask(const QuotientView& q, uint32_t mask) {
  uint32_t minima = 0;
  for (int a = 0; a < q.cl; ++a) {
    if (!((mask >> a) & 1u)) continue;
    bool minimal = true;
    for (int b = 0; b < q.cl && minimal; ++b)
      if (b != a && ((mask >> b) & 1u) && q.leqClass(b, a)) minimal = false;
    if (minimal) minima |= 1u << a;
  }
  return minima;
}

// Nonempty level-1 fibers of a surjective order-preserving class map on the
// sub-poset mask: down-closed subsets (weak) or antichains of minima (strict).
std::vector<uint32_t> levelFibers(const QuotientView& q, uint32_t mask, CountMode mode) {
  std::vector<uint32_t> fibers;
  if (mode == CountMode::STRICT) {
    uint32_t minima = minimaMask(q, mask);
    for (uint32_t b = minima; b; b = (b - 1) & minima) fibers.push_back(b);
  } else {
    for (uint32_t b = mask; b; b = (b - 1) & mask) {
      uint32_t rest = mask & ~b;
      bool closed = true;
      for (int a = 0; a < q.cl && closed; ++a)
        if (((rest >> a) & 1u) && (q.order[a] & b)) closed = false;
      if (closed) fibers.push_back(b);
    }
  }
  return fibers;
}

struct PolyCacheKey {
  CanonicalKey key;
  CountMode mode;
  auto operator<=>(const PolyCacheKey&) const = default;
};

std::map<PolyCacheKey, Polynomial>& polyCache() {
  static std::map<PolyCacheKey, Polynomial> cache;
  return cache;
}
std::shared_mutex& polyCacheMutex() {
  static std::shared_mutex mu;
  return mu;
}

std::map<PolyCacheKey, Polynomial>& recCache() {
  static std::map<PolyCacheKey, Polynomial> cache;
  return cache;
}
std::shared_mutex& recCacheMutex() {
  static std::shared_mutex mu;
  return mu;
}

}  // namespace

Int countMapsSerial(const QuasiPoset& p, int k, CountMode mode) {
  if (k < 0) throw InputError("map count needs k >= 0");
  int n = p.n();
  if (n == 0) return 1;
  if (k == 0) return 0;
  guardCapacity(n, k);
  EdgeLists e = edgeLists(p);
  Int total = 0;
  for (int first = 1; first <= k; ++first) total += countMapsPinned(p, k, mode, e, first);
  return total;
}

Int countMaps(const QuasiPoset& p, int k, CountMode mode) {
  if (k < 0) throw InputError("map count needs k >= 0");
  int n = p.n();
  if (n == 0) return 1;
  if (k == 0) return 0;
  guardCapacity(n, k);
  EdgeLists e = edgeLists(p);
#ifdef QPEHR_HAVE_OPENMP
  std::vector<Int> parts(k);
#pragma omp parallel for schedule(dynamic)
  for (int first = 1; first <= k; ++first)
    parts[first - 1] = countMapsPinned(p, k, mode, e, first);
  Int total = 0;
  for (const Int& part : parts) total += part;
  return total;
#else
  Int total = 0;
  for (int first = 1; first <= k; ++first) total += countMapsPinned(p, k, mode, e, first);
  return total;
#endif
}

std::map<int, std::vector<PackedWord>> surjectionWords(const QuasiPoset& p, CountMode mode) {
  std::map<int, std::vector<PackedWord>> out;
  QuotientView q = quotient(p);
  int n = p.n();
  std::vector<int> vertexClass(n);
  for (int a = 0; a < q.cl; ++a)
    for (int v : q.classes[a]) vertexClass[v - 1] = a;
  std::vector<int> classLevel(q.cl, 0);
  uint32_t full = q.cl == 32 ? ~0u : ((1u << q.cl) - 1);

  auto emit = [&](int levels) {
    std::vector<int> letters(n);
    for (int v = 0; v < n; ++v) letters[v] = classLevel[vertexClass[v]];
    out[levels].emplace_back(letters);
  };
  auto rec = [&](auto&& self, uint32_t mask, int level) -> void {
    if (mask == 0) {
      emit(level - 1);
      return;
    }
    for (uint32_t fiber : levelFibers(q, mask, mode)) {
      for (int a = 0; a < q.cl; ++a)
        if ((fiber >> a) & 1u) classLevel[a] = level;
      self(self, mask & ~fiber, level + 1);
    }
  };
  rec(rec, full, 1);
  for (auto& [level, words] : out) std::sort(words.begin(), words.end());
  return out;
}

Polynomial ehrPolynomial(const QuasiPoset& p, CountMode mode) {
  PolyCacheKey ck{canonicalKey(p), mode};
  {
    std::shared_lock lock(polyCacheMutex());
    auto it = polyCache().find(ck);
    if (it != polyCache().end()) return it->second;
  }
  QuotientView q = quotient(p);
  uint32_t full = q.cl == 32 ? ~0u : ((1u << q.cl) - 1);
  // counts[mask][i]: surjective order-preserving class maps mask -> [i].
  std::map<uint32_t, std::vector<Int>> counts;
  auto rec = [&](auto&& self, uint32_t mask) -> const std::vector<Int>& {
    auto it = counts.find(mask);
    if (it != counts.end()) return it->second;
    std::vector<Int> row(static_cast<size_t>(std::popcount(mask)) + 1, 0);
    if (mask == 0) {
      row[0] = 1;
    } else {
      for (uint32_t fiber : levelFibers(q, mask, mode)) {
        const std::vector<Int>& sub = self(self, mask & ~fiber);
        for (size_t i = 0; i < sub.size(); ++i) row[i + 1] += sub[i];
      }
    }
    return counts.emplace(mask, std::move(row)).first->second;
  };
  const std::vector<Int>& top = rec(rec, full);
  Polynomial result;
  for (size_t i = 0; i < top.size(); ++i)
    if (top[i] != 0) result += hilbert(static_cast<int>(i)) * Rat(top[i]);
  std::unique_lock lock(polyCacheMutex());
  return polyCache().emplace(ck, std::move(result)).first->second;
}

Polynomial ehrRecursive(const QuasiPoset& p, CountMode mode) {
  PolyCacheKey ck{canonicalKey(p), mode};
  {
    std::shared_lock lock(recCacheMutex());
    auto it = recCache().find(ck);
    if (it != recCache().end()) return it->second;
  }
  Polynomial result;
  if (p.n() == 0) {
    result = Polynomial::constant(Rat(1));
  } else {
    uint32_t full = (1u << p.n()) - 1;
    Polynomial inner;
    for (uint32_t open : openSets(p)) {
      if (open == 0) continue;
      if (mode == CountMode::STRICT && hasStrictPair(restrict(p, open))) continue;
      inner += ehrRecursive(restrict(p, full & ~open), mode);
    }
    result = lOperator(inner);
  }
  std::unique_lock lock(recCacheMutex());
  return recCache().emplace(ck, std::move(result)).first->second;
}

HeapStats heapStats(const QuasiPoset& p) {
  QuotientView q = quotient(p);
  uint32_t full = q.cl == 32 ? ~0u : ((1u << q.cl) - 1);
  // Down-set DP: extensions(mask) counts linear orders of the sub-poset on
  // mask that refine the class order, peeling one maximal class at a time.
  std::map<uint32_t, Int> memo;
  auto rec = [&](auto&& self, uint32_t mask) -> Int {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (int a = 0; a < q.cl; ++a) {
      if (!((mask >> a) & 1u)) continue;
      if ((q.order[a] & mask) != (1u << a)) continue;  // not maximal in mask
      total += self(self, mask & ~(1u << a));
    }
    return memo.emplace(mask, std::move(total)).first->second;
  };
  HeapStats stats;
  stats.mu = rec(rec, full);
  stats.pFactorial = 1;
  for (int a = 0; a < q.cl; ++a) stats.pFactorial *= std::popcount(q.order[a]);
  stats.lambdaValue = Rat(stats.mu) / Rat(factorial(q.cl));
  return stats;
}

bool quotientIsForest(const QuasiPoset& p) {
  QuotientView q = quotient(p);
  for (int a = 0; a < q.cl; ++a)
    for (int b = a + 1; b < q.cl; ++b) {
      if (q.leqClass(a, b) || q.leqClass(b, a)) continue;
      if (q.order[a] & q.order[b]) return false;  // shared upper bound
    }
  return true;
}

std::vector<PackedWord> linearExtensions(const QuasiPoset& p) {
  int cl = quotient(p).cl;
  auto words = surjectionWords(p, CountMode::STRICT);
  return words[cl];
}

QuasiPoset reconstructOrder(const std::vector<PackedWord>& words, int n) {
  if (words.empty()) throw InputError("order reconstruction needs at least one word");
  for (const PackedWord& w : words)
    if (w.length() != n) throw InputError("order reconstruction: word length != n");
  std::vector<uint32_t> rows(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      bool all = true;
      for (const PackedWord& w : words)
        if (w.at(i) > w.at(j)) {
          all = false;
          break;
        }
      if (all) rows[i - 1] |= 1u << (j - 1);
    }
  return QuasiPoset(n, std::move(rows));
}

QuasiPoset corolla(int k) {
  if (k < 0) throw InputError("corolla size must be >= 0");
  if (k + 1 > kMaxVertices) throw CapacityError("corolla too large");
  std::vector<Generator> gens;
  for (int leaf = 2; leaf <= k + 1; ++leaf) gens.push_back({1, leaf, GenKind::LE});
  return fromGenerators(k + 1, gens);
}

Rat bernoulli(int k) {
  return ehrPolynomial(corolla(k), CountMode::STRICT).coeff(1);
}

Polynomial faulhaber(int k) {
  if (k < 0) throw InputError("power-sum index must be >= 0");
  if (k == 0) return Polynomial({Rat(-1), Rat(1)});  // 1^0 + ... + (n-1)^0 = n - 1
  Polynomial s;
  for (int i = 0; i <= k; ++i) {
    Rat c = Rat(binomial(k, i)) * bernoulli(i) / Rat(k - i + 1);
    if (c == 0) continue;
    std::vector<Rat> mono(static_cast<size_t>(k - i + 2), Rat(0));
    mono[static_cast<size_t>(k - i + 1)] = c;
    s += Polynomial(std::move(mono));
  }
  return s;
}

}  // namespace qpehr
