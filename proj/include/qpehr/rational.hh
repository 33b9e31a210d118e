// Exact rational scalars. Thin helpers around GMP's mpq_class: every
// coefficient, character value and polynomial entry in this library is a Rat.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qpehr {

using Rat = mpq_class;
using Int = mpz_class;

// Raised on malformed user input (text grammars, JSON shapes, CLI arguments).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a request exceeds the practical desk-scale bounds.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on mathematically undefined requests (e.g. inverting a character
// that vanishes on a single-class quasi-poset).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "a", "-a" or "a/b" with ASCII minus. Denominator must be non-zero.
inline Rat parseRat(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  for (char c : s)
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw InputError("bad character in rational literal: '" + s + "'");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw InputError("unparsable rational literal: '" + s + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string ratText(const Rat& r) { return r.get_str(); }

inline Rat binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= (n - i);
  Int den = 1;
  for (long i = 1; i <= k; ++i) den *= i;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace qpehr
