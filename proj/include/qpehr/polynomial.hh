// Exact rational univariate polynomials in X, dense ascending coefficients,
// with the binomial-coefficient basis H_k(X) = X(X-1)...(X-k+1)/k!, the
// summation operator L (H_k -> H_{k+1}), and X -> -X reflection.
#pragma once

#include <string>
#include <vector>

#include "qpehr/rational.hh"

namespace qpehr {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rat& r) { return Polynomial({r}); }
  static Polynomial x() { return Polynomial({Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rat coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rat& r);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rat& r) { return a *= r; }
  friend Polynomial operator*(const Rat& r, Polynomial a) { return a *= r; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

Polynomial hilbert(int k);
std::vector<Rat> toHilbertBasis(const Polynomial& p);
Polynomial fromHilbertBasis(const std::vector<Rat>& coords);
Polynomial lOperator(const Polynomial& p);
Rat evaluateAt(const Polynomial& p, const Rat& x);
Polynomial reflectNegate(const Polynomial& p);  // p(X) -> p(-X)
Polynomial derivative(const Polynomial& p);
Polynomial shiftArgument(const Polynomial& p, const Rat& a);  // p(X) -> p(X+a)

// Text form `a0 + a1*X + a2*X^2`, zero terms omitted, "0" for the zero
// polynomial, negative coefficients folded into ` - `.
std::string polynomialText(const Polynomial& p);
Polynomial parsePolynomialText(const std::string& text);

}  // namespace qpehr
