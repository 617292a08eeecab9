#pragma once
// Exact scalar layer: arbitrary-precision rationals and integers (GMP).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cartoric {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rat ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// x^e with integer e; e < 0 requires x != 0.
inline Rat pow_rat(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x == 0 && e < 0) throw std::domain_error("pow_rat: 0 to negative power");
  Rat base = e > 0 ? x : Rat(1) / x;
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rat acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace cartoric
