#include "qpehr/character.hh"

#include <mutex>
#include <shared_mutex>
#include <utility>

#include "qpehr/ehrhart.hh"
#include "qpehr/enumerate.hh"

namespace qpehr {

struct Character::Impl {
  std::string name;
  ConnectedRule rule;
  std::map<CanonicalKey, Rat> memo;
  mutable std::shared_mutex mu;
};

Character::Character(std::string name, ConnectedRule onConnected)
    : impl_(std::make_shared<Impl>()) {
  impl_->name = std::move(name);
  impl_->rule = std::move(onConnected);
}

const std::string& Character::name() const { return impl_->name; }

Rat Character::operator()(const QuasiPoset& p) const {
  Rat value = 1;
  for (const std::vector<int>& component : connectedComponents(p)) {
    uint32_t mask = 0;
    for (int v : component) mask |= 1u << (v - 1);
    CanonicalForm form = canonicalForm(restrict(p, mask));
    {
      std::shared_lock lock(impl_->mu);
      auto it = impl_->memo.find(form.key);
      if (it != impl_->memo.end()) {
        value *= it->second;
        continue;
      }
    }
    Rat piece = impl_->rule(form.representative, *this);
    {
      std::unique_lock lock(impl_->mu);
      impl_->memo.emplace(form.key, piece);
    }
    value *= piece;
  }
  return value;
}

std::map<CanonicalKey, Rat> Character::memoSnapshot() const {
  std::shared_lock lock(impl_->mu);
  return impl_->memo;
}

void Character::seedMemo(const CanonicalKey& key, const Rat& value) const {
  std::unique_lock lock(impl_->mu);
  impl_->memo.emplace(key, value);
}

Character builtinCharacter(BuiltinChar which) {
  switch (which) {
    case BuiltinChar::EPS_PRIME:
      return Character("eps-prime", [](const QuasiPoset& p, const Character&) {
        return Rat(hasStrictPair(p) ? 0 : 1);
      });
    case BuiltinChar::IOTA:
      return Character("iota", [](const QuasiPoset&, const Character&) { return Rat(1); });
    case BuiltinChar::LAMBDA:
      return Character("lambda", [](const QuasiPoset& p, const Character&) {
        return heapStats(p).lambdaValue;
      });
    case BuiltinChar::ALPHA:
      return Character("alpha", [](const QuasiPoset& p, const Character&) {
        return ehrPolynomial(p, CountMode::WEAK).coeff(1);
      });
    case BuiltinChar::ALPHA_STR:
      return Character("alpha-str", [](const QuasiPoset& p, const Character&) {
        return ehrPolynomial(p, CountMode::STRICT).coeff(1);
      });
    case BuiltinChar::BETA:
      return Character("beta", [](const QuasiPoset& p, const Character&) {
        int cl = quotient(p).cl;
        Rat value = heapStats(p).lambdaValue;  // connected: cc = 1
        return (cl + 1) % 2 == 0 ? value : -value;
      });
  }
  throw InputError("unknown builtin character");
}

Character builtinCharacter(const std::string& name) {
  if (name == "eps-prime") return builtinCharacter(BuiltinChar::EPS_PRIME);
  if (name == "iota") return builtinCharacter(BuiltinChar::IOTA);
  if (name == "lambda") return builtinCharacter(BuiltinChar::LAMBDA);
  if (name == "alpha") return builtinCharacter(BuiltinChar::ALPHA);
  if (name == "alpha-str") return builtinCharacter(BuiltinChar::ALPHA_STR);
  if (name == "beta") return builtinCharacter(BuiltinChar::BETA);
  throw InputError("unknown character name: " + name);
}

Character convolve(const Character& a, const Character& b) {
  return Character("(" + a.name() + "*" + b.name() + ")",
                   [a, b](const QuasiPoset& p, const Character&) {
                     Rat total = 0;
                     for (const Equivalence& eq : compatibleEquivalences(p))
                       total += a(contract(p, eq)) * b(restrictByEq(p, eq));
                     return total;
                   });
}

Character inverseCharacter(const Character& a) {
  return Character(
      a.name() + "^-1", [a](const QuasiPoset& p, const Character& self) {
        if (p.n() == 0) return Rat(1);
        Equivalence whole;
        std::vector<int> all(static_cast<size_t>(p.n()));
        for (int v = 1; v <= p.n(); ++v) all[v - 1] = v;
        whole.blocks = {all};
        Rat leading = a(contract(p, whole));  // a on the single-class collapse
        if (leading == 0)
          throw DomainError("character " + a.name() +
                            " has no convolution inverse: zero on a single-class element");
        if (quotient(p).cl == 1) return Rat(Rat(1) / leading);
        // eps-prime vanishes on connected P with cl >= 2; the whole-block
        // term isolates the unknown value.
        Rat rest = 0;
        for (const Equivalence& eq : compatibleEquivalences(p)) {
          if (eq.classCount() == 1) continue;
          rest += a(contract(p, eq)) * self(restrictByEq(p, eq));
        }
        return Rat(-rest / leading);
      });
}

Polynomial morphismFromCharacter(const QuasiPoset& p, const Character& chi) {
  static const Character lambda = builtinCharacter(BuiltinChar::LAMBDA);
  Polynomial result;
  for (const Equivalence& eq : compatibleEquivalences(p)) {
    Rat c = lambda(contract(p, eq)) * chi(restrictByEq(p, eq));
    if (c == 0) continue;
    std::vector<Rat> mono(static_cast<size_t>(eq.classCount()) + 1, Rat(0));
    mono.back() = c;
    result += Polynomial(std::move(mono));
  }
  return result;
}

bool charactersAgree(const Character& a, const Character& b, int maxN, bool connectedOnly) {
  for (int n = 0; n <= maxN; ++n) {
    std::vector<QuasiPoset> reps =
        connectedOnly ? enumerateConnectedIsoReps(n, false) : enumerateIsoReps(n, false);
    for (const QuasiPoset& p : reps)
      if (a(p) != b(p)) return false;
  }
  return true;
}

}  // namespace qpehr
