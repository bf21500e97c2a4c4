#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sepcert/exact/integer.hpp"
#include "sepcert/exact/poly.hpp"

namespace sepcert::exact {

/// Polynomial over the prime field F_p, p < 2^62. Coefficients ascending,
/// reduced into [0, p), no trailing zeros.
class ModPoly {
 public:
  explicit ModPoly(std::uint64_t p) : p_(p) {}
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static ModPoly from_int(const IntPoly& f, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint64_t leading() const { return c_.back(); }

  IntPoly to_int() const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  ModPoly derivative() const;
  ModPoly monic() const;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly gcd(ModPoly a, ModPoly b);
/// base^e mod m for an arbitrary-precision exponent.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);

using FactorList = std::vector<std::pair<IntPoly, unsigned>>;

/// Irreducible factorization over F_p: squarefree decomposition, then
/// distinct-degree, then equal-degree splitting with a fixed seed. Factors
/// are monic with coefficients in [0, p), sorted with poly_less.
/// Throws NotPrime for composite p; InvalidArgument if f vanishes mod p.
FactorList factor_mod_p(const IntPoly& f, const Integer& p);

/// Leading coefficient of f mod p (the unit scalar omitted by factor_mod_p).
std::uint64_t leading_mod_p(const IntPoly& f, std::uint64_t p);

}  // namespace sepcert::exact
