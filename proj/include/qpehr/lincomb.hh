// Finite formal linear combinations over an ordered basis type with exact
// rational coefficients. Zero coefficients are never stored, so equality of
// term maps is equality of values.
#pragma once

#include <map>
#include <utility>

#include "qpehr/rational.hh"

namespace qpehr {

template <class B>
class LinComb {
 public:
  using Terms = std::map<B, Rat>;

  LinComb() = default;
  static LinComb basis(const B& b) {
    LinComb x;
    x.add(b, Rat(1));
    return x;
  }

  // The rvalue overload moves the map out so that iterating the terms of a
  // temporary (`for (... : f(x).terms())`) never dangles under C++20
  // range-for lifetime rules.
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool isZero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const B& b, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Rat& r) {
    if (r == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= r;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rat& r) { return a *= r; }
  friend LinComb operator*(const Rat& r, LinComb a) { return a *= r; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Terms terms_;
};

// Extends a basis map B -> LinComb<C> (or any additive value) linearly.
template <class B, class F>
auto applyLinearly(const LinComb<B>& x, F&& f) {
  using Out = decltype(f(std::declval<const B&>()));
  Out acc{};
  for (const auto& [b, c] : x.terms()) {
    Out y = f(b);
    y *= c;
    acc += y;
  }
  return acc;
}

template <class A, class B>
using Tensor2 = LinComb<std::pair<A, B>>;

template <class A, class B>
Tensor2<A, B> tensor(const LinComb<A>& x, const LinComb<B>& y) {
  Tensor2<A, B> out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add({a, b}, ca * cb);
  return out;
}

}  // namespace qpehr
