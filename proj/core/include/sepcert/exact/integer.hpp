#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sepcert::exact {

/// Arbitrary-precision integers and rationals are GMP's C++ classes.
/// mpq_class keeps values canonical (lowest terms, positive denominator)
/// as long as every constructor path calls canonicalize(), which make_rational
/// does.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Floor-style remainder in [0, |m|).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b).
struct ExtGcd {
  Integer g, s, t;
};

inline ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Inverse of a modulo m, or false if gcd(a, m) != 1.
inline bool inverse_mod(const Integer& a, const Integer& m, Integer& out) {
  return mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline bool is_prime(const Integer& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

inline Integer next_prime(const Integer& n) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Prime factorization by trial division; meant for desk-scale integers
/// (denominators, norms, moduli).
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

inline std::int64_t to_i64(const Integer& z) {
  return static_cast<std::int64_t>(z.get_si());
}

inline bool fits_i64(const Integer& z) { return z.fits_slong_p() != 0; }

Rational parse_rational(std::string_view text);

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace sepcert::exact
