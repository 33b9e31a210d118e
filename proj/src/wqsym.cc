#include "qpehr/wqsym.hh"

#include <algorithm>
#include <bit>

namespace qpehr {

namespace {

// Letter substitution v -> f[v-1]; the image of a packed word under a
// surjective f is packed again.
PackedWord substitute(const std::vector<int>& f, const PackedWord& w) {
  std::vector<int> letters(static_cast<size_t>(w.length()));
  for (int pos = 1; pos <= w.length(); ++pos) letters[pos - 1] = f[w.at(pos) - 1];
  return PackedWord(std::move(letters));
}

// Strictly increasing maps [k] -> [m] as value lists, from a subset mask.
std::vector<std::vector<int>> increasingMaps(int k, int m) {
  std::vector<std::vector<int>> maps;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> f;
    for (int v = 1; v <= m; ++v)
      if ((mask >> (v - 1)) & 1u) f.push_back(v);
    maps.push_back(std::move(f));
  }
  return maps;
}

// Ordered compositions of m into positive parts.
std::vector<std::vector<int>> compositions(int m) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(parts);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      parts.push_back(part);
      self(self, rest - part);
      parts.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

}  // namespace

WordComb productW(const PackedWord& u, const PackedWord& v) {
  int ku = u.maxLetter();
  int kv = v.maxLetter();
  WordComb out;
  for (int m = std::max(ku, kv); m <= ku + kv; ++m) {
    for (const std::vector<int>& a : increasingMaps(ku, m)) {
      uint32_t aImage = 0;
      for (int value : a) aImage |= 1u << (value - 1);
      for (const std::vector<int>& b : increasingMaps(kv, m)) {
        uint32_t bImage = 0;
        for (int value : b) bImage |= 1u << (value - 1);
        if ((aImage | bImage) != (m == 0 ? 0u : (1u << m) - 1)) continue;
        std::vector<int> letters;
        letters.reserve(static_cast<size_t>(u.length() + v.length()));
        for (int pos = 1; pos <= u.length(); ++pos) letters.push_back(a[u.at(pos) - 1]);
        for (int pos = 1; pos <= v.length(); ++pos) letters.push_back(b[v.at(pos) - 1]);
        out.add(PackedWord(std::move(letters)), Rat(1));
      }
    }
  }
  return out;
}

WordComb productW(const WordComb& x, const WordComb& y) {
  WordComb out;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) out += productW(u, v) * (cu * cv);
  return out;
}

WordTensor coproductW(const PackedWord& w) {
  WordTensor out;
  for (int k = 0; k <= w.maxLetter(); ++k) {
    std::vector<int> low, high;
    for (int v = 1; v <= k; ++v) low.push_back(v);
    for (int v = k + 1; v <= w.maxLetter(); ++v) high.push_back(v);
    out.add({PackedWord(restrictLetters(w, low)), pack(restrictLetters(w, high))}, Rat(1));
  }
  return out;
}

WordTensor coproductW(const WordComb& x) {
  return applyLinearly(x, [](const PackedWord& w) { return coproductW(w); });
}

WordTensor internalCoproductW(const PackedWord& w) {
  WordTensor out;
  int m = w.maxLetter();
  if (m == 0) {
    out.add({w, w}, Rat(1));
    return out;
  }
  std::vector<PackedWord> taus = allPackedWords(m);
  for (const std::vector<int>& parts : compositions(m)) {
    std::vector<int> sigma;
    for (size_t block = 0; block < parts.size(); ++block)
      sigma.insert(sigma.end(), static_cast<size_t>(parts[block]),
                   static_cast<int>(block) + 1);
    for (const PackedWord& tau : taus) {
      bool risingInBlocks = true;
      for (int v = 1; v < m && risingInBlocks; ++v)
        if (sigma[v - 1] == sigma[v] && tau.at(v) >= tau.at(v + 1)) risingInBlocks = false;
      if (!risingInBlocks) continue;
      out.add({substitute(sigma, w), substitute(tau.letters(), w)}, Rat(1));
    }
  }
  return out;
}

WordTensor internalCoproductW(const WordComb& x) {
  return applyLinearly(x, [](const PackedWord& w) { return internalCoproductW(w); });
}

WordComb ordinalProduct(const PackedWord& u, const PackedWord& v, OrdinalMode mode) {
  if (u.length() == 0) return wordBasis(v);
  if (v.length() == 0) return wordBasis(u);
  auto shifted = [&](int shift) {
    std::vector<int> letters(u.letters());
    for (int pos = 1; pos <= v.length(); ++pos) letters.push_back(v.at(pos) + shift);
    return PackedWord(std::move(letters));
  };
  WordComb out;
  if (mode != OrdinalMode::STAR) out.add(shifted(u.maxLetter()), Rat(1));
  if (mode != OrdinalMode::DOWN) out.add(shifted(u.maxLetter() - 1), Rat(1));
  return out;
}

WordComb ordinalProduct(const WordComb& x, const WordComb& y, OrdinalMode mode) {
  WordComb out;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) out += ordinalProduct(u, v, mode) * (cu * cv);
  return out;
}

WordComb ehrMorphism(const QuasiPoset& p, CountMode mode) {
  WordComb out;
  for (const auto& [level, words] : surjectionWords(p, mode))
    for (const PackedWord& w : words) out.add(w, Rat(1));
  return out;
}

WordComb ehrMorphism(const LinComb<QuasiPoset>& x, CountMode mode) {
  return applyLinearly(x, [mode](const QuasiPoset& p) { return ehrMorphism(p, mode); });
}

WordComb phiAutomorphism(const WordComb& x, const Rat& lambda) {
  return applyLinearly(x, [&lambda](const PackedWord& w) {
    WordComb out;
    int m = w.maxLetter();
    for (const std::vector<int>& parts : compositions(m)) {
      Rat c = 1;
      std::vector<int> sigma;
      for (size_t block = 0; block < parts.size(); ++block) {
        c *= evaluateAt(hilbert(parts[block]), lambda);
        sigma.insert(sigma.end(), static_cast<size_t>(parts[block]),
                     static_cast<int>(block) + 1);
      }
      if (c != 0) out.add(substitute(sigma, w), c);
    }
    return out;
  });
}

Polynomial hMorphism(const WordComb& x) {
  Polynomial out;
  for (const auto& [w, c] : x.terms()) out += hilbert(w.maxLetter()) * c;
  return out;
}

Rat counitW(const WordComb& x) { return x.coeff(PackedWord()); }

Rat counitInternalW(const WordComb& x) {
  Rat total = 0;
  for (const auto& [w, c] : x.terms())
    if (w.maxLetter() <= 1) total += c;
  return total;
}

bool wordLeq(const PackedWord& a, const PackedWord& b) {
  if (a.length() != b.length()) throw InputError("word order compares equal lengths only");
  for (int i = 1; i <= a.length(); ++i)
    for (int j = 1; j <= a.length(); ++j)
      if (a.at(i) < a.at(j) && b.at(i) >= b.at(j)) return false;
  return true;
}

QuasiPoset posetFromWord(const PackedWord& w) {
  int n = w.length();
  std::vector<uint32_t> rows(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i == j || w.at(i) < w.at(j)) rows[i - 1] |= 1u << (j - 1);
  return QuasiPoset(n, std::move(rows));
}

}  // namespace qpehr
