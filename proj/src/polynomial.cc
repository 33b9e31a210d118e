#include "qpehr/polynomial.hh"

#include <sstream>

namespace qpehr {

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& r) {
  for (auto& c : c_) c *= r;
  trim();
  return *this;
}

Polynomial hilbert(int k) {
  if (k < 0) throw InputError("hilbert index must be non-negative");
  Polynomial h = Polynomial::constant(Rat(1));
  for (int i = 0; i < k; ++i) {
    // h *= (X - i) / (i + 1)
    h *= Polynomial({Rat(-i), Rat(1)});
    h *= Rat(1, i + 1);
  }
  return h;
}

std::vector<Rat> toHilbertBasis(const Polynomial& p) {
  // Newton forward differences: p = sum_i (D^i p)(0) H_i.
  int d = p.isZero() ? 0 : p.degree();
  std::vector<Rat> vals(d + 1);
  for (int j = 0; j <= d; ++j) vals[j] = evaluateAt(p, Rat(j));
  std::vector<Rat> coords(d + 1);
  for (int i = 0; i <= d; ++i) {
    coords[i] = vals[0];
    for (int j = 0; j + 1 < static_cast<int>(vals.size()); ++j)
      vals[j] = vals[j + 1] - vals[j];
    vals.pop_back();
  }
  while (!coords.empty() && coords.back() == 0) coords.pop_back();
  return coords;
}

Polynomial fromHilbertBasis(const std::vector<Rat>& coords) {
  Polynomial p;
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) p += coords[i] * hilbert(static_cast<int>(i));
  return p;
}

Polynomial lOperator(const Polynomial& p) {
  std::vector<Rat> coords = toHilbertBasis(p);
  coords.insert(coords.begin(), Rat(0));
  return fromHilbertBasis(coords);
}

Rat evaluateAt(const Polynomial& p, const Rat& x) {
  Rat acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial reflectNegate(const Polynomial& p) {
  std::vector<Rat> c = p.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
  if (p.coeffs().size() <= 1) return Polynomial();
  std::vector<Rat> c(p.coeffs().size() - 1);
  for (size_t i = 1; i < p.coeffs().size(); ++i) c[i - 1] = Rat(int(i)) * p.coeffs()[i];
  return Polynomial(std::move(c));
}

Polynomial shiftArgument(const Polynomial& p, const Rat& a) {
  Polynomial xa({a, Rat(1)});
  Polynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * xa + Polynomial::constant(*it);
  return acc;
}

std::string polynomialText(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    Rat c = p.coeffs()[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (k == 0) {
      os << ratText(c);
    } else {
      if (c != 1) os << ratText(c) << '*';
      os << 'X';
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

Polynomial parsePolynomialText(const std::string& text) {
  // Accepts the renderer's output shape: terms `c`, `c*X^k`, `X^k` joined by
  // binary +/- with optional leading sign.
  size_t i = 0;
  auto skipWs = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  std::vector<Rat> coeffs;
  auto add = [&](int k, const Rat& c) {
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, Rat(0));
    coeffs[k] += c;
  };
  skipWs();
  if (i >= text.size()) throw InputError("empty polynomial");
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  while (true) {
    skipWs();
    Rat c(1);
    bool sawCoeff = false;
    size_t start = i;
    while (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '/')) ++i;
    if (i > start) {
      c = parseRat(text.substr(start, i - start));
      sawCoeff = true;
      skipWs();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skipWs();
      }
    }
    int k = 0;
    if (i < text.size() && text[i] == 'X') {
      ++i;
      k = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t es = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == es) throw InputError("missing exponent in polynomial");
        k = std::stoi(text.substr(es, i - es));
      }
    } else if (!sawCoeff) {
      throw InputError("expected term at position " + std::to_string(i));
    }
    add(k, neg ? -c : c);
    skipWs();
    if (i >= text.size()) break;
    if (text[i] == '+') neg = false;
    else if (text[i] == '-') neg = true;
    else throw InputError("expected '+' or '-' at position " + std::to_string(i));
    ++i;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace qpehr
