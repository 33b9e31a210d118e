// Command-line front end. Flags are parsed by hand: option values may be
// negative numbers (`wqsym phi -1 "(12)"`), so only `--`-prefixed tokens are
// treated as flags and single-dash tokens stay positional.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qpehr/character.hh"
#include "qpehr/ehrhart.hh"
#include "qpehr/enumerate.hh"
#include "qpehr/hopf.hh"
#include "qpehr/packedword.hh"
#include "qpehr/polynomial.hh"
#include "qpehr/quasiposet.hh"
#include "qpehr/verify.hh"
#include "qpehr/wqsym.hh"

namespace {

using nlohmann::ordered_json;
using namespace qpehr;

const char kUsage[] =
    "usage: qpehr [--format text|json] [--cache PATH] COMMAND ...\n"
    "\n"
    "commands:\n"
    "  ehr \"N: i<j ...\" [--classical] [--eval K]   weak count polynomial\n"
    "  ehr-str \"N: ...\" [--classical] [--eval K]   strict count polynomial\n"
    "  coproduct Delta|delta \"N: ...\"              restriction / contraction coproduct\n"
    "  char lambda|alpha|alpha-str|beta|eps-prime|iota \"N: ...\" [--inverse]\n"
    "  theta \"N: ...\" [--inverse]                  strict-to-weak transport\n"
    "  antipode \"N: ...\"\n"
    "  wqsym ehr|ehr-str \"N: ...\"                  word-valued count morphism\n"
    "  wqsym phi LAMBDA \"(w)\"                      scaling automorphism\n"
    "  wqsym product \"(u)\" \"(v)\"\n"
    "  wqsym coproduct|internal \"(w)\"\n"
    "  enumerate qp|p N [--iso]                    list quasi-posets / posets\n"
    "  bernoulli K\n"
    "  faulhaber K\n"
    "  verify SUITE [--max-n N]                    suites: hopf, cointeraction,\n"
    "                                              duality, characters, wqsym,\n"
    "                                              paper-tables, all\n"
    "\n"
    "quasi-poset grammar: `N: i<j i~k ...`; packed words: `(122)`.\n"
    "QPEHR_CACHE names a default cache file for `char`.\n";

struct Args {
  std::vector<std::string> pos;
  std::string format = "text";
  std::string cache;
  bool classical = false;
  bool inverse = false;
  bool iso = false;
  std::optional<long> eval;
  int maxN = 0;
};

long parseLong(const std::string& s, const char* what) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (...) {
    throw InputError(std::string("bad integer for ") + what + ": '" + s + "'");
  }
  if (used != s.size())
    throw InputError(std::string("bad integer for ") + what + ": '" + s + "'");
  return v;
}

Args parseArgs(const std::vector<std::string>& raw) {
  Args a;
  if (const char* env = std::getenv("QPEHR_CACHE")) a.cache = env;
  for (size_t i = 0; i < raw.size(); ++i) {
    const std::string& t = raw[i];
    auto value = [&](const char* flag) -> const std::string& {
      if (++i >= raw.size())
        throw InputError(std::string(flag) + " needs a value");
      return raw[i];
    };
    if (t == "--format") {
      a.format = value("--format");
    } else if (t.rfind("--format=", 0) == 0) {
      a.format = t.substr(9);
    } else if (t == "--cache") {
      a.cache = value("--cache");
    } else if (t.rfind("--cache=", 0) == 0) {
      a.cache = t.substr(8);
    } else if (t == "--classical") {
      a.classical = true;
    } else if (t == "--inverse") {
      a.inverse = true;
    } else if (t == "--iso") {
      a.iso = true;
    } else if (t == "--eval") {
      a.eval = parseLong(value("--eval"), "--eval");
    } else if (t.rfind("--eval=", 0) == 0) {
      a.eval = parseLong(t.substr(7), "--eval");
    } else if (t == "--max-n") {
      a.maxN = static_cast<int>(parseLong(value("--max-n"), "--max-n"));
    } else if (t.rfind("--max-n=", 0) == 0) {
      a.maxN = static_cast<int>(parseLong(t.substr(8), "--max-n"));
    } else if (t.rfind("--", 0) == 0) {
      throw InputError("unknown flag: " + t);
    } else {
      a.pos.push_back(t);
    }
  }
  if (a.format != "text" && a.format != "json")
    throw InputError("--format must be text or json");
  return a;
}

// --- text renderers ---------------------------------------------------------

template <class B, class TextFn>
std::string linCombText(const LinComb<B>& x, TextFn&& basisText) {
  if (x.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    Rat mag = c;
    if (first) {
      if (c < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    if (mag != 1) os << ratText(mag) << '*';
    os << basisText(b);
    first = false;
  }
  return os.str();
}

std::string qpBracket(const QuasiPoset& p) {
  return "[" + quasiPosetText(p) + "]";
}

std::string qpPairText(const std::pair<QuasiPoset, QuasiPoset>& t) {
  return qpBracket(t.first) + " (x) " + qpBracket(t.second);
}

std::string wordPairText(const std::pair<PackedWord, PackedWord>& t) {
  return packedWordText(t.first) + " (x) " + packedWordText(t.second);
}

// --- json renderers ---------------------------------------------------------

ordered_json wordJson(const PackedWord& w) {
  return ordered_json(w.letters());
}

template <class B, class JsonFn>
ordered_json linCombJson(const LinComb<B>& x, JsonFn&& basisJson) {
  ordered_json arr = ordered_json::array();
  for (const auto& [b, c] : x.terms())
    arr.push_back(ordered_json{{"c", ratText(c)}, {"b", basisJson(b)}});
  return arr;
}

ordered_json polyJson(const Polynomial& p) {
  ordered_json coeffs = ordered_json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(ratText(c));
  return ordered_json{{"coeffs", std::move(coeffs)}};
}

void emit(const Args& a, const std::string& text, const ordered_json& j) {
  if (a.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

void emitRat(const Args& a, const Rat& r) {
  emit(a, ratText(r), ordered_json{{"value", ratText(r)}});
}

void emitPoly(const Args& a, const Polynomial& p) {
  emit(a, polynomialText(p), polyJson(p));
}

void emitQPComb(const Args& a, const QPComb& x) {
  emit(a, linCombText(x, qpBracket),
       linCombJson(x, [](const QuasiPoset& p) { return quasiPosetText(p); }));
}

void emitQPTensor(const Args& a, const QPTensor& x) {
  emit(a, linCombText(x, qpPairText),
       linCombJson(x, [](const std::pair<QuasiPoset, QuasiPoset>& t) {
         return ordered_json{quasiPosetText(t.first), quasiPosetText(t.second)};
       }));
}

void emitWordComb(const Args& a, const WordComb& x) {
  emit(a, linCombText(x, packedWordText),
       linCombJson(x, [](const PackedWord& w) { return wordJson(w); }));
}

void emitWordTensor(const Args& a, const WordTensor& x) {
  emit(a, linCombText(x, wordPairText),
       linCombJson(x, [](const std::pair<PackedWord, PackedWord>& t) {
         return ordered_json{wordJson(t.first), wordJson(t.second)};
       }));
}

// --- character memo cache ---------------------------------------------------

// Versioned line-oriented file: header `qpehr-cache v1`, then
// NAME<TAB>key-hex<TAB>fraction rows. Any structural damage discards the
// whole file with a warning; a rewrite goes through a temp file + rename.
struct CacheStore {
  std::string path;
  std::map<std::pair<std::string, std::string>, std::string> rows;

  void load() {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) return;  // absent is fine; it will be created on save
    std::map<std::pair<std::string, std::string>, std::string> fresh;
    std::string line;
    bool ok = static_cast<bool>(std::getline(in, line)) && line == "qpehr-cache v1";
    while (ok && std::getline(in, line)) {
      if (line.empty()) continue;
      size_t t1 = line.find('\t');
      size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
      if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
        ok = false;
        break;
      }
      std::string kind = line.substr(0, t1);
      std::string hex = line.substr(t1 + 1, t2 - t1 - 1);
      std::string frac = line.substr(t2 + 1);
      try {
        keyFromHex(hex);
        parseRat(frac);
      } catch (const std::exception&) {
        ok = false;
        break;
      }
      fresh[{std::move(kind), std::move(hex)}] = std::move(frac);
    }
    if (!ok) {
      std::cerr << "warning: discarding corrupt cache at " << path << "\n";
      return;
    }
    rows = std::move(fresh);
  }

  void seed(const Character& chi) const {
    for (const auto& [kh, frac] : rows)
      if (kh.first == chi.name())
        chi.seedMemo(keyFromHex(kh.second), parseRat(frac));
  }

  void absorb(const Character& chi) {
    for (const auto& [key, value] : chi.memoSnapshot())
      rows[{chi.name(), keyHex(key)}] = ratText(value);
  }

  void save() const {
    if (path.empty()) return;
    std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) {
        std::cerr << "warning: cannot write cache at " << path << "\n";
        return;
      }
      out << "qpehr-cache v1\n";
      for (const auto& [kh, frac] : rows)
        out << kh.first << '\t' << kh.second << '\t' << frac << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
      std::cerr << "warning: cannot replace cache at " << path << "\n";
  }
};

// --- commands ----------------------------------------------------------------

void needArgs(const Args& a, size_t count, const char* usage) {
  if (a.pos.size() != count) throw InputError(std::string("usage: qpehr ") + usage);
}

int cmdEhr(const Args& a, CountMode mode) {
  needArgs(a, 2, "ehr[-str] \"N: i<j ...\" [--classical] [--eval K]");
  QuasiPoset p = parseQuasiPoset(a.pos[1]);
  Polynomial poly = ehrPolynomial(p, mode);
  if (a.classical) poly = shiftArgument(poly, Rat(1));
  if (a.eval) {
    emitRat(a, evaluateAt(poly, Rat(*a.eval)));
  } else {
    emitPoly(a, poly);
  }
  return 0;
}

int cmdCoproduct(const Args& a) {
  needArgs(a, 3, "coproduct Delta|delta \"N: i<j ...\"");
  QuasiPoset p = parseQuasiPoset(a.pos[2]);
  if (a.pos[1] == "Delta") {
    emitQPTensor(a, coproductDelta(p));
  } else if (a.pos[1] == "delta") {
    emitQPTensor(a, coproductDeltaInternal(p));
  } else {
    throw InputError("coproduct kind must be Delta or delta");
  }
  return 0;
}

int cmdChar(const Args& a) {
  needArgs(a, 3, "char NAME \"N: i<j ...\" [--inverse]");
  Character chi = builtinCharacter(a.pos[1]);
  QuasiPoset p = parseQuasiPoset(a.pos[2]);
  CacheStore cache{a.cache, {}};
  cache.load();
  cache.seed(chi);
  if (a.inverse) {
    Character inv = inverseCharacter(chi);
    cache.seed(inv);
    Rat value = inv(p);
    cache.absorb(chi);
    cache.absorb(inv);
    cache.save();
    emitRat(a, value);
  } else {
    Rat value = chi(p);
    cache.absorb(chi);
    cache.save();
    emitRat(a, value);
  }
  return 0;
}

int cmdTheta(const Args& a) {
  needArgs(a, 2, "theta \"N: i<j ...\" [--inverse]");
  QPComb unit = qpBasis(parseQuasiPoset(a.pos[1]));
  emitQPComb(a, a.inverse ? thetaInverse(unit) : theta(unit));
  return 0;
}

int cmdAntipode(const Args& a) {
  needArgs(a, 2, "antipode \"N: i<j ...\"");
  emitQPComb(a, antipode(parseQuasiPoset(a.pos[1])));
  return 0;
}

int cmdWqsym(const Args& a) {
  if (a.pos.size() < 2)
    throw InputError("usage: qpehr wqsym ehr|ehr-str|phi|product|coproduct|internal ...");
  const std::string& sub = a.pos[1];
  if (sub == "ehr" || sub == "ehr-str") {
    needArgs(a, 3, "wqsym ehr|ehr-str \"N: i<j ...\"");
    CountMode mode = sub == "ehr" ? CountMode::WEAK : CountMode::STRICT;
    emitWordComb(a, ehrMorphism(parseQuasiPoset(a.pos[2]), mode));
    return 0;
  }
  if (sub == "phi") {
    needArgs(a, 4, "wqsym phi LAMBDA \"(word)\"");
    Rat lambda = parseRat(a.pos[2]);
    emitWordComb(a, phiAutomorphism(wordBasis(parsePackedWord(a.pos[3])), lambda));
    return 0;
  }
  if (sub == "product") {
    needArgs(a, 4, "wqsym product \"(u)\" \"(v)\"");
    emitWordComb(a, productW(parsePackedWord(a.pos[2]), parsePackedWord(a.pos[3])));
    return 0;
  }
  if (sub == "coproduct") {
    needArgs(a, 3, "wqsym coproduct \"(word)\"");
    emitWordTensor(a, coproductW(parsePackedWord(a.pos[2])));
    return 0;
  }
  if (sub == "internal") {
    needArgs(a, 3, "wqsym internal \"(word)\"");
    emitWordTensor(a, internalCoproductW(parsePackedWord(a.pos[2])));
    return 0;
  }
  throw InputError("unknown wqsym subcommand: " + sub);
}

int cmdEnumerate(const Args& a) {
  needArgs(a, 3, "enumerate qp|p N [--iso]");
  bool posetsOnly = false;
  if (a.pos[1] == "p") {
    posetsOnly = true;
  } else if (a.pos[1] != "qp") {
    throw InputError("enumerate kind must be qp or p");
  }
  int n = static_cast<int>(parseLong(a.pos[2], "N"));
  std::vector<QuasiPoset> list =
      a.iso ? enumerateIsoReps(n, posetsOnly) : enumerateLabeled(n, posetsOnly);
  if (a.format == "json") {
    ordered_json items = ordered_json::array();
    for (const QuasiPoset& p : list) items.push_back(quasiPosetText(p));
    std::cout << ordered_json{{"count", list.size()}, {"items", std::move(items)}}.dump(2)
              << "\n";
  } else {
    for (const QuasiPoset& p : list) std::cout << quasiPosetText(p) << "\n";
  }
  return 0;
}

int cmdBernoulli(const Args& a) {
  needArgs(a, 2, "bernoulli K");
  emitRat(a, bernoulli(static_cast<int>(parseLong(a.pos[1], "K"))));
  return 0;
}

int cmdFaulhaber(const Args& a) {
  needArgs(a, 2, "faulhaber K");
  emitPoly(a, faulhaber(static_cast<int>(parseLong(a.pos[1], "K"))));
  return 0;
}

int cmdVerify(const Args& a) {
  needArgs(a, 2, "verify SUITE [--max-n N]");
  SuiteReport report = runSuite(a.pos[1], a.maxN);
  if (a.format == "json") {
    ordered_json ids = ordered_json::array();
    for (const IdentityResult& r : report.identities)
      ids.push_back(ordered_json{{"name", r.name},
                                 {"pass", r.pass},
                                 {"cases", r.cases},
                                 {"detail", r.detail}});
    std::cout << ordered_json{{"suite", report.suite},
                              {"pass", report.allPass()},
                              {"identities", std::move(ids)}}
                     .dump(2)
              << "\n";
  } else {
    long passed = 0;
    for (const IdentityResult& r : report.identities) {
      if (r.pass) {
        ++passed;
        std::cout << "PASS " << r.name << " (" << r.cases << " cases)\n";
      } else {
        std::cout << "FAIL " << r.name << " (" << r.cases << " cases): "
                  << r.detail << "\n";
      }
    }
    std::cout << "suite " << report.suite << ": " << passed << "/"
              << report.identities.size() << " identities passed, "
              << report.totalCases() << " cases\n";
  }
  return report.allPass() ? 0 : 1;
}

int dispatch(const Args& a) {
  const std::string& cmd = a.pos[0];
  if (cmd == "ehr") return cmdEhr(a, CountMode::WEAK);
  if (cmd == "ehr-str") return cmdEhr(a, CountMode::STRICT);
  if (cmd == "coproduct") return cmdCoproduct(a);
  if (cmd == "char") return cmdChar(a);
  if (cmd == "theta") return cmdTheta(a);
  if (cmd == "antipode") return cmdAntipode(a);
  if (cmd == "wqsym") return cmdWqsym(a);
  if (cmd == "enumerate") return cmdEnumerate(a);
  if (cmd == "bernoulli") return cmdBernoulli(a);
  if (cmd == "faulhaber") return cmdFaulhaber(a);
  if (cmd == "verify") return cmdVerify(a);
  throw InputError("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> raw(argv + 1, argv + argc);
  try {
    Args a = parseArgs(raw);
    if (a.pos.empty()) {
      std::cerr << kUsage;
      return 2;
    }
    return dispatch(a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
