#include "qpehr/enumerate.hh"

#include <algorithm>
#include <cstdint>
#include <map>

namespace qpehr {

namespace {

constexpr int kMaxLabeledN = 6;  // 2^30 candidates; beyond that the scan is hopeless

// Decodes an off-diagonal bit pattern into rows (diagonal forced) and accepts
// it iff the relation is already transitive, i.e. equals its closure.
inline bool decodeClosed(int n, uint64_t code, bool posetsOnly,
                         std::vector<uint32_t>& rows) {
  int bit = 0;
  for (int i = 0; i < n; ++i) rows[i] = 1u << i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((code >> bit) & 1u) rows[i] |= 1u << j;
      ++bit;
    }
  for (int i = 0; i < n; ++i) {
    uint32_t r = rows[i];
    uint32_t reach = r;
    for (int k = 0; k < n; ++k)
      if ((r >> k) & 1u) {
        reach |= rows[k];
        if (reach != r) return false;
      }
  }
  if (posetsOnly) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (((rows[i] >> j) & 1u) && ((rows[j] >> i) & 1u)) return false;
  }
  return true;
}

}  // namespace

std::vector<QuasiPoset> enumerateLabeledSerial(int n, bool posetsOnly) {
  if (n < 0 || n > kMaxLabeledN) throw CapacityError("labeled enumeration bounded at n <= 6");
  std::vector<QuasiPoset> out;
  int bits = n * (n - 1);
  std::vector<uint32_t> rows(n);
  for (uint64_t code = 0; code < (uint64_t{1} << bits); ++code)
    if (decodeClosed(n, code, posetsOnly, rows)) out.emplace_back(n, rows);
  return out;
}

std::vector<QuasiPoset> enumerateLabeled(int n, bool posetsOnly) {
  if (n < 0 || n > kMaxLabeledN) throw CapacityError("labeled enumeration bounded at n <= 6");
#ifdef QPEHR_HAVE_OPENMP
  if (n >= 4) {
    int bits = n * (n - 1);
    // Partition the code space into contiguous chunks; concatenating the
    // per-chunk results in chunk order reproduces the serial ascending order.
    const int chunkBits = 10;
    const uint64_t chunks = uint64_t{1} << chunkBits;
    const uint64_t per = (uint64_t{1} << bits) >> chunkBits;
    std::vector<std::vector<QuasiPoset>> parts(chunks);
#pragma omp parallel for schedule(dynamic)
    for (int64_t c = 0; c < static_cast<int64_t>(chunks); ++c) {
      std::vector<uint32_t> rows(n);
      auto& local = parts[c];
      uint64_t lo = per * c, hi = per * (c + 1);
      for (uint64_t code = lo; code < hi; ++code)
        if (decodeClosed(n, code, posetsOnly, rows)) local.emplace_back(n, rows);
    }
    std::vector<QuasiPoset> out;
    for (auto& part : parts)
      out.insert(out.end(), part.begin(), part.end());
    return out;
  }
#endif
  return enumerateLabeledSerial(n, posetsOnly);
}

std::vector<QuasiPoset> enumerateIsoReps(int n, bool posetsOnly) {
  std::vector<QuasiPoset> labeled = enumerateLabeled(n, posetsOnly);
  std::map<CanonicalKey, QuasiPoset> reps;
  for (const QuasiPoset& p : labeled) {
    CanonicalForm cf = canonicalForm(p);
    reps.emplace(cf.key, cf.representative);
  }
  std::vector<QuasiPoset> out;
  out.reserve(reps.size());
  for (auto& [key, rep] : reps) out.push_back(rep);
  return out;
}

std::vector<CanonicalKey> enumerateIsoKeys(int n, bool posetsOnly) {
  std::vector<CanonicalKey> out;
  for (const QuasiPoset& p : enumerateIsoReps(n, posetsOnly))
    out.push_back(canonicalKey(p));
  return out;
}

std::vector<QuasiPoset> enumerateConnectedIsoReps(int n, bool posetsOnly) {
  std::vector<QuasiPoset> out;
  for (const QuasiPoset& p : enumerateIsoReps(n, posetsOnly))
    if (connectedComponents(p).size() <= 1) out.push_back(p);
  return out;
}

}  // namespace qpehr
