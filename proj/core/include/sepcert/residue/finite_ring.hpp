#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepcert/exact/poly.hpp"

namespace sepcert::residue {

using exact::Integer;
using exact::IntPoly;

/// Coefficient vector of length deg(g), ascending.
using RingElem = std::vector<std::int64_t>;

/// Z[x]/(g, q) for monic g. Usually g = f mod q; g may also be a monic
/// factor of f mod q when a residue field is wanted.
class FiniteRing {
 public:
  FiniteRing(std::int64_t q, IntPoly g);

  std::int64_t modulus() const { return q_; }
  /// Reduced defining polynomial, coefficients in [0, q).
  const IntPoly& poly() const { return g_; }
  std::size_t degree() const { return d_; }

  RingElem zero() const { return RingElem(d_, 0); }
  RingElem one() const;
  RingElem from_int(const Integer& v) const;
  /// Reduces a polynomial with integer coefficients mod (g, q).
  RingElem reduce(const IntPoly& p) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  bool is_zero(const RingElem& a) const;

  /// det of multiplication-by-a, reduced mod q.
  std::int64_t norm(const RingElem& a) const;
  bool is_unit(const RingElem& a) const;
  /// Throws NotInvertible for non-units.
  RingElem inverse(const RingElem& a) const;

  /// Enumerates all q^d elements; only for small rings.
  std::vector<RingElem> elements() const;

  bool operator==(const FiniteRing& o) const { return q_ == o.q_ && g_ == o.g_; }
  std::string to_string() const;

 private:
  std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % q_);
  }
  std::int64_t q_;
  IntPoly g_;
  std::size_t d_;
};

/// n x n matrix over a FiniteRing, entries stored row-major.
struct FiniteMatrix {
  std::size_t n = 0;
  std::vector<RingElem> entries;

  const RingElem& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  RingElem& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  bool operator==(const FiniteMatrix& o) const = default;
};

FiniteMatrix identity(const FiniteRing& ring, std::size_t n);
FiniteMatrix multiply(const FiniteRing& ring, const FiniteMatrix& a, const FiniteMatrix& b);
RingElem determinant(const FiniteRing& ring, const FiniteMatrix& m);
bool is_upper_triangular(const FiniteRing& ring, const FiniteMatrix& m);

/// Canonical bytes: coefficients row-major, 8 bytes little-endian each.
void append_encoding(std::string& out, const FiniteMatrix& m);

std::string to_string(const FiniteMatrix& m);

}  // namespace sepcert::residue
