#include "qpehr/quasiposet.hh"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>

namespace qpehr {

namespace {

// Warshall closure over bitmask rows; diagonal assumed set.
void closeRows(int n, std::vector<uint32_t>& rows) {
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((rows[i] >> k) & 1u) rows[i] |= rows[k];
}

bool rowsClosed(int n, const std::vector<uint32_t>& rows) {
  for (int i = 0; i < n; ++i) {
    if (!((rows[i] >> i) & 1u)) return false;
    uint32_t reach = rows[i];
    for (int k = 0; k < n; ++k)
      if ((rows[i] >> k) & 1u) reach |= rows[k];
    if (reach != rows[i]) return false;
  }
  return true;
}

}  // namespace

QuasiPoset::QuasiPoset(int n, std::vector<uint32_t> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("vertex count out of range");
  if (static_cast<int>(rows_.size()) != n) throw InputError("row count mismatch");
  if (!rowsClosed(n, rows_)) throw InputError("relation is not reflexive-transitive");
}

bool QuasiPoset::isDiscrete() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (leq(i, j) && !leq(j, i)) return false;
  return true;
}

QuasiPoset fromGenerators(int n, const std::vector<Generator>& gens) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("vertex count out of range");
  std::vector<uint32_t> rows(n, 0);
  for (int i = 0; i < n; ++i) rows[i] = 1u << i;
  for (const Generator& g : gens) {
    if (g.i < 1 || g.i > n || g.j < 1 || g.j > n)
      throw InputError("generator vertex out of range");
    rows[g.i - 1] |= 1u << (g.j - 1);
    if (g.kind == GenKind::EQUIV) rows[g.j - 1] |= 1u << (g.i - 1);
  }
  closeRows(n, rows);
  return QuasiPoset(n, std::move(rows));
}

int Equivalence::blockOf(int v) const {
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b])
      if (x == v) return static_cast<int>(b);
  throw InputError("vertex not covered by partition");
}

void Equivalence::normalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<Equivalence> allSetPartitions(int n) {
  // Restricted growth strings: rgs[0]=0, rgs[i] <= 1+max(prefix).
  std::vector<Equivalence> out;
  if (n == 0) {
    out.push_back(Equivalence{});
    return out;
  }
  std::vector<int> rgs(n, 0);
  while (true) {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    Equivalence eq;
    eq.blocks.assign(k, {});
    for (int i = 0; i < n; ++i) eq.blocks[rgs[i]].push_back(i + 1);
    out.push_back(std::move(eq));
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

QuotientView quotient(const QuasiPoset& p) {
  QuotientView q;
  int n = p.n();
  std::vector<int> cls(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(q.classes.size());
    q.classes.push_back({});
    for (int j = i; j <= n; ++j)
      if (cls[j] < 0 && p.equiv(i, j)) {
        cls[j] = id;
        q.classes[id].push_back(j);
      }
  }
  q.cl = static_cast<int>(q.classes.size());
  q.order.assign(q.cl, 0);
  for (int a = 0; a < q.cl; ++a)
    for (int b = 0; b < q.cl; ++b)
      if (p.leq(q.classes[a][0], q.classes[b][0])) q.order[a] |= 1u << b;
  q.cc = static_cast<int>(connectedComponents(p).size());
  return q;
}

std::vector<std::vector<int>> connectedComponents(const QuasiPoset& p) {
  int n = p.n();
  std::vector<int> comp(n + 1, -1);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    if (comp[i] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.push_back({});
    std::vector<int> stack{i};
    comp[i] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int j = 1; j <= n; ++j)
        if (comp[j] < 0 && (p.leq(v, j) || p.leq(j, v))) {
          comp[j] = id;
          stack.push_back(j);
        }
    }
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

std::vector<uint32_t> openSets(const QuasiPoset& p) {
  QuotientView q = quotient(p);
  std::vector<uint32_t> classMask(q.cl, 0);
  for (int a = 0; a < q.cl; ++a)
    for (int v : q.classes[a]) classMask[a] |= 1u << (v - 1);
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < (1u << q.cl); ++s) {
    bool up = true;
    for (int a = 0; a < q.cl && up; ++a)
      if ((s >> a) & 1u)
        if ((q.order[a] & ~s) != 0) up = false;  // a <= b forces b in s
    if (!up) continue;
    uint32_t mask = 0;
    for (int a = 0; a < q.cl; ++a)
      if ((s >> a) & 1u) mask |= classMask[a];
    out.push_back(mask);
  }
  std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

QuasiPoset restrict(const QuasiPoset& p, uint32_t mask) {
  std::vector<int> verts;
  for (int i = 1; i <= p.n(); ++i)
    if ((mask >> (i - 1)) & 1u) verts.push_back(i);
  int m = static_cast<int>(verts.size());
  std::vector<uint32_t> rows(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.leq(verts[a], verts[b])) rows[a] |= 1u << b;
  return QuasiPoset(m, std::move(rows));
}

QuasiPoset productDisjoint(const QuasiPoset& p, const QuasiPoset& q) {
  int k = p.n(), l = q.n();
  if (k + l > kMaxVertices) throw CapacityError("product too large");
  std::vector<uint32_t> rows(k + l, 0);
  for (int i = 0; i < k; ++i) rows[i] = p.row(i + 1);
  for (int i = 0; i < l; ++i) rows[k + i] = q.row(i + 1) << k;
  return QuasiPoset(k + l, std::move(rows));
}

QuasiPoset productOrdinal(const QuasiPoset& p, const QuasiPoset& q) {
  int k = p.n(), l = q.n();
  if (k + l > kMaxVertices) throw CapacityError("product too large");
  std::vector<uint32_t> rows(k + l, 0);
  uint32_t upper = ((l ? ((1u << l) - 1u) : 0u)) << k;
  for (int i = 0; i < k; ++i) rows[i] = p.row(i + 1) | upper;
  for (int i = 0; i < l; ++i) rows[k + i] = q.row(i + 1) << k;
  return QuasiPoset(k + l, std::move(rows));
}

QuasiPoset opposite(const QuasiPoset& p) {
  int n = p.n();
  std::vector<uint32_t> rows(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (p.leq(j, i)) rows[i - 1] |= 1u << (j - 1);
  return QuasiPoset(n, std::move(rows));
}

bool hasStrictPair(const QuasiPoset& p) {
  for (int i = 1; i <= p.n(); ++i)
    for (int j = 1; j <= p.n(); ++j)
      if (p.leq(i, j) && !p.leq(j, i)) return true;
  return false;
}

QuasiPoset contract(const QuasiPoset& p, const Equivalence& eq) {
  int n = p.n();
  std::vector<uint32_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = p.row(i + 1);
  std::vector<uint32_t> blockMask(eq.blocks.size(), 0);
  for (size_t b = 0; b < eq.blocks.size(); ++b)
    for (int v : eq.blocks[b]) blockMask[b] |= 1u << (v - 1);
  for (size_t b = 0; b < eq.blocks.size(); ++b)
    for (int v : eq.blocks[b]) rows[v - 1] |= blockMask[b];
  closeRows(n, rows);
  return QuasiPoset(n, std::move(rows));
}

QuasiPoset restrictByEq(const QuasiPoset& p, const Equivalence& eq) {
  int n = p.n();
  std::vector<uint32_t> blockMask(eq.blocks.size(), 0);
  for (size_t b = 0; b < eq.blocks.size(); ++b)
    for (int v : eq.blocks[b]) blockMask[b] |= 1u << (v - 1);
  std::vector<uint32_t> rows(n, 0);
  for (size_t b = 0; b < eq.blocks.size(); ++b)
    for (int v : eq.blocks[b]) rows[v - 1] = p.row(v) & blockMask[b];
  return QuasiPoset(n, std::move(rows));
}

bool isCompatible(const QuasiPoset& p, const Equivalence& eq) {
  // Each block must induce a connected restriction of p.
  for (const auto& block : eq.blocks) {
    uint32_t mask = 0;
    for (int v : block) mask |= 1u << (v - 1);
    if (connectedComponents(restrict(p, mask)).size() > 1) return false;
  }
  // The contraction's class partition must reproduce eq.
  QuotientView q = quotient(contract(p, eq));
  if (q.classes.size() != eq.blocks.size()) return false;
  for (size_t b = 0; b < q.classes.size(); ++b)
    if (q.classes[b] != eq.blocks[b]) return false;
  return true;
}

std::vector<Equivalence> compatibleEquivalences(const QuasiPoset& p) {
  std::vector<Equivalence> out;
  for (const Equivalence& eq : allSetPartitions(p.n()))
    if (isCompatible(p, eq)) out.push_back(eq);
  return out;
}

namespace {

CanonicalKey encodeRows(int n, const std::vector<uint32_t>& rows) {
  std::string key;
  key.push_back(static_cast<char>(n));
  int bits = n * n;
  key.resize(1 + (bits + 7) / 8, '\0');
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((rows[i] >> j) & 1u) {
        int pos = i * n + j;
        key[1 + pos / 8] |= static_cast<char>(1 << (pos % 8));
      }
  return key;
}

}  // namespace

CanonicalForm canonicalForm(const QuasiPoset& p) {
  int n = p.n();
  // Vertex invariants: (class size, in-degree, out-degree). Isomorphisms
  // preserve them, so the minimum over permutations respecting the sorted
  // invariant groups is the orbit minimum.
  QuotientView q = quotient(p);
  std::vector<int> clsSize(n + 1, 0), indeg(n + 1, 0), outdeg(n + 1, 0);
  for (const auto& cls : q.classes)
    for (int v : cls) clsSize[v] = static_cast<int>(cls.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (p.leq(i, j)) {
        ++outdeg[i];
        ++indeg[j];
      }
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 1);
  auto inv = [&](int v) { return std::array<int, 3>{clsSize[v], indeg[v], outdeg[v]}; };
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    auto ia = inv(a), ib = inv(b);
    if (ia != ib) return ia < ib;
    return a < b;
  });
  std::vector<std::pair<int, int>> groups;  // [begin, end) in verts
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv(verts[j]) == inv(verts[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::vector<int> best;
  std::vector<uint32_t> bestRows;
  std::vector<int> cur(verts);
  // pos[v]-1 is the new index of old vertex v under the current labeling.
  std::vector<int> pos(n + 1, 0);
  auto consider = [&]() {
    for (int i = 0; i < n; ++i) pos[cur[i]] = i;
    std::vector<uint32_t> rows(n, 0);
    for (int i = 0; i < n; ++i) {
      uint32_t r = p.row(cur[i]);
      while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        rows[i] |= 1u << pos[j + 1];
      }
    }
    if (best.empty() || rows < bestRows) {
      best = cur;
      bestRows = rows;
    }
  };
  // Product of permutations within each invariant group.
  auto rec = [&](auto&& self, size_t g) -> void {
    if (g == groups.size()) {
      consider();
      return;
    }
    auto [b, e] = groups[g];
    std::sort(cur.begin() + b, cur.begin() + e);
    do {
      self(self, g + 1);
    } while (std::next_permutation(cur.begin() + b, cur.begin() + e));
  };
  rec(rec, 0);
  if (n == 0) return CanonicalForm{encodeRows(0, {}), QuasiPoset()};
  return CanonicalForm{encodeRows(n, bestRows), QuasiPoset(n, bestRows)};
}

CanonicalKey canonicalKey(const QuasiPoset& p) { return canonicalForm(p).key; }

QuasiPoset decodeKey(const CanonicalKey& key) {
  if (key.empty()) throw InputError("empty canonical key");
  int n = static_cast<unsigned char>(key[0]);
  if (n > kMaxVertices) throw InputError("corrupt canonical key");
  int bits = n * n;
  if (static_cast<int>(key.size()) != 1 + (bits + 7) / 8)
    throw InputError("corrupt canonical key");
  std::vector<uint32_t> rows(n, 0);
  for (int pos = 0; pos < bits; ++pos)
    if ((key[1 + pos / 8] >> (pos % 8)) & 1)
      rows[pos / n] |= 1u << (pos % n);
  return QuasiPoset(n, std::move(rows));
}

std::string keyHex(const CanonicalKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalKey keyFromHex(const std::string& hex) {
  if (hex.size() % 2) throw InputError("odd hex length");
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw InputError("bad hex digit");
  };
  CanonicalKey key;
  for (size_t i = 0; i < hex.size(); i += 2)
    key.push_back(static_cast<char>(nib(hex[i]) << 4 | nib(hex[i + 1])));
  return key;
}

QuasiPoset parseQuasiPoset(const std::string& text) {
  size_t i = 0;
  auto skipWs = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
  auto parseInt = [&]() -> int {
    skipWs();
    size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start)
      throw InputError("expected integer at position " + std::to_string(start) +
                       " in '" + text + "'");
    return std::stoi(text.substr(start, i - start));
  };
  int n = parseInt();
  skipWs();
  if (i >= text.size() || text[i] != ':')
    throw InputError("expected ':' at position " + std::to_string(i) + " in '" + text + "'");
  ++i;
  std::vector<Generator> gens;
  while (true) {
    skipWs();
    if (i >= text.size()) break;
    int a = parseInt();
    skipWs();
    if (i >= text.size() || (text[i] != '<' && text[i] != '~'))
      throw InputError("expected '<' or '~' at position " + std::to_string(i) +
                       " in '" + text + "'");
    GenKind kind = text[i] == '<' ? GenKind::LE : GenKind::EQUIV;
    ++i;
    int b = parseInt();
    if (a < 1 || a > n || b < 1 || b > n)
      throw InputError("vertex out of range in '" + text + "'");
    gens.push_back({a, b, kind});
  }
  return fromGenerators(n, gens);
}

std::string quasiPosetText(const QuasiPoset& p) {
  QuotientView q = quotient(p);
  std::ostringstream os;
  os << p.n() << ":";
  for (const auto& cls : q.classes)
    for (size_t i = 0; i + 1 < cls.size(); ++i)
      os << ' ' << cls[i] << '~' << cls[i + 1];
  // Covering relations of the quotient, via least representatives.
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < q.cl; ++a)
    for (int b = 0; b < q.cl; ++b) {
      if (a == b || !q.leqClass(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < q.cl && cover; ++c)
        if (c != a && c != b && q.leqClass(a, c) && q.leqClass(c, b)) cover = false;
      if (cover) covers.emplace_back(q.classes[a][0], q.classes[b][0]);
    }
  std::sort(covers.begin(), covers.end());
  for (auto [a, b] : covers) os << ' ' << a << '<' << b;
  return os.str();
}

}  // namespace qpehr
