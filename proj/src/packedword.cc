#include "qpehr/packedword.hh"

#include <algorithm>
#include <map>
#include <sstream>

namespace qpehr {

PackedWord::PackedWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_) {
    if (x < 1) throw InputError("packed word letters must be positive");
    max_ = std::max(max_, x);
  }
  std::vector<bool> seen(max_ + 1, false);
  for (int x : letters_) seen[x] = true;
  for (int v = 1; v <= max_; ++v)
    if (!seen[v]) throw InputError("word is not packed: letter gap at " + std::to_string(v));
}

PackedWord pack(const std::vector<int>& word) {
  std::map<int, int> relabel;
  for (int x : word) relabel[x] = 0;
  int next = 1;
  for (auto& [v, r] : relabel) r = next++;
  std::vector<int> out;
  out.reserve(word.size());
  for (int x : word) out.push_back(relabel[x]);
  return PackedWord(std::move(out));
}

std::vector<int> restrictLetters(const PackedWord& w, const std::vector<int>& letterSet) {
  std::vector<int> out;
  for (int x : w.letters())
    if (std::find(letterSet.begin(), letterSet.end(), x) != letterSet.end())
      out.push_back(x);
  return out;
}

std::vector<PackedWord> allPackedWords(int length) {
  std::vector<PackedWord> out;
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  if (length > 8) throw CapacityError("packed word scan bounded at length 8");
  // Odometer over {1..length}^length; keep words whose letter set is {1..max}.
  std::vector<int> w(length, 1);
  while (true) {
    int mx = *std::max_element(w.begin(), w.end());
    std::vector<bool> seen(mx + 1, false);
    for (int x : w) seen[x] = true;
    bool packed = true;
    for (int v = 1; v <= mx; ++v)
      if (!seen[v]) packed = false;
    if (packed) out.emplace_back(w);
    int i = length - 1;
    while (i >= 0 && w[i] == length) {
      w[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string packedWordText(const PackedWord& w) {
  std::ostringstream os;
  os << '(';
  if (w.maxLetter() <= 9) {
    for (int x : w.letters()) os << x;
  } else {
    for (int i = 0; i < w.length(); ++i) {
      if (i) os << ',';
      os << w.letters()[i];
    }
  }
  os << ')';
  return os.str();
}

PackedWord parsePackedWord(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  if (i >= text.size() || text[i] != '(') throw InputError("packed word must start with '('");
  ++i;
  size_t close = text.find(')', i);
  if (close == std::string::npos) throw InputError("packed word missing ')'");
  for (size_t j = close + 1; j < text.size(); ++j)
    if (text[j] != ' ') throw InputError("trailing characters after packed word");
  std::string body = text.substr(i, close - i);
  std::vector<int> letters;
  if (body.find(',') != std::string::npos) {
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) throw InputError("empty letter in packed word");
      letters.push_back(std::stoi(tok));
    }
  } else {
    for (char c : body) {
      if (c == ' ') continue;
      if (c < '0' || c > '9') throw InputError("bad digit in packed word");
      letters.push_back(c - '0');
    }
  }
  return PackedWord(std::move(letters));
}

}  // namespace qpehr
