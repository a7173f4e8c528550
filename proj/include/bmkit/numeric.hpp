#pragma once

#include <gmpxx.h>

#include <string>

#include "bmkit/errors.hpp"

namespace bmkit {

/// All counting is exact; Int never silently truncates.
using Int = mpz_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Exact quotient; throws if b does not divide a. Used wherever a formula
/// guarantees integrality so that a bug cannot round silently.
inline Int exact_div(const Int& a, const Int& b, const char* what) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error(std::string(what) + ": expected exact division");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Largest k with p^k | x (x != 0, p >= 2).
inline unsigned long valuation(const Int& x, const Int& p) {
  if (x == 0) throw argument_error("valuation of zero");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;  // deterministic far past 64 bits
}

/// q = p^k for a prime p, k >= 1. Reports the base if asked.
inline bool is_prime_power(unsigned long q, unsigned long* base = nullptr) {
  if (q < 2) return false;
  unsigned long p = q;
  for (unsigned long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned long rest = q;
  while (rest % p == 0) rest /= p;
  if (rest != 1) return false;
  if (base) *base = p;
  return true;
}

}  // namespace bmkit
