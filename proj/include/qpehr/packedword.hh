// Packed words: finite sequences of positive integers whose letter set is
// exactly {1..max}. Basis of the word quasi-symmetric algebra.
#pragma once

#include <string>
#include <vector>

#include "qpehr/rational.hh"

namespace qpehr {

class PackedWord {
 public:
  PackedWord() = default;
  // letters must use every value 1..max(letters).
  explicit PackedWord(std::vector<int> letters);

  int length() const { return static_cast<int>(letters_.size()); }
  int maxLetter() const { return max_; }
  int at(int pos) const { return letters_[pos - 1]; }  // 1-based
  const std::vector<int>& letters() const { return letters_; }

  friend bool operator==(const PackedWord&, const PackedWord&) = default;
  friend auto operator<=>(const PackedWord& a, const PackedWord& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
  int max_ = 0;
};

// Relabels letters by the increasing bijection onto {1..k}.
PackedWord pack(const std::vector<int>& word);

// Subword of positions whose letter lies in the set; raw word, not packed.
std::vector<int> restrictLetters(const PackedWord& w, const std::vector<int>& letterSet);

// All packed words of the given length (Fubini-many).
std::vector<PackedWord> allPackedWords(int length);

// Text form `(122)` for max <= 9, `(1,2,2,10)` otherwise, `()` when empty.
std::string packedWordText(const PackedWord& w);
PackedWord parsePackedWord(const std::string& text);

}  // namespace qpehr
