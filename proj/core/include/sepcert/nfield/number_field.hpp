#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepcert/exact/integer.hpp"
#include "sepcert/exact/poly.hpp"

namespace sepcert::nfield {

using exact::Integer;
using exact::IntPoly;
using exact::Rational;

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// K = Q[x]/(f) for a monic polynomial f irreducible over Q. The
/// distinguished root alpha is the class of x. Q itself is represented with
/// f = x (degree 1, alpha = 0).
class NumberField {
 public:
  /// Verifies that f is monic and irreducible over Q; throws Reducible
  /// otherwise.
  static FieldPtr create(const IntPoly& minimal_poly);
  static FieldPtr rationals();

  const IntPoly& minimal_poly() const { return f_; }
  std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }
  bool is_rationals() const { return degree() == 1; }
  /// Discriminant of the minimal polynomial; used as the index guard for
  /// residue maps.
  const Integer& discriminant() const { return disc_; }

  bool same_as(const NumberField& o) const { return f_ == o.f_; }
  std::string to_string() const;

 private:
  explicit NumberField(IntPoly f);
  IntPoly f_;
  Integer disc_;
};

/// Element sum(coords[i] * alpha^i). A null field marks a rational scalar
/// that adopts the field of whatever it is combined with; this keeps
/// Poly<FieldElement> and literals like FieldElement(1) usable.
class FieldElement {
 public:
  FieldElement() : coords_{Rational(0)} {}
  FieldElement(int v) : coords_{Rational(v)} {}  // NOLINT: literal promotion
  FieldElement(const Rational& v) : coords_{v} {}  // NOLINT
  FieldElement(FieldPtr field, std::vector<Rational> coords);
  static FieldElement alpha(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  /// Coordinates padded to the field degree (length 1 for scalars).
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coordinate; only meaningful when is_rational().
  const Rational& rational_value() const { return coords_[0]; }

  /// lcm of coordinate denominators.
  Integer denominator() const;

  FieldElement inverse() const;
  FieldElement pow(const Integer& e) const;
  FieldElement pow(long e) const { return pow(Integer(e)); }
  /// Field norm N_{K/Q}.
  Rational norm() const;
  /// Rational matrix of multiplication by this element on the power basis.
  std::vector<std::vector<Rational>> multiplication_matrix() const;

  FieldElement with_field(const FieldPtr& f) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// Lexicographic order on coordinates; used to make root and eigenvalue
/// choices deterministic.
bool lex_less(const FieldElement& a, const FieldElement& b);

FieldPtr common_field(const FieldElement& a, const FieldElement& b);

using KPoly = exact::Poly<FieldElement>;

/// Exact multiplicative order if u is a root of unity. Only orders w with
/// Euler-phi(w) <= [K:Q] are possible and those are the only ones tried.
std::optional<unsigned long> is_root_of_unity(const FieldElement& u);

/// Generator and order of the full group of roots of unity in K.
struct RootsOfUnity {
  FieldElement generator;
  unsigned long order = 2;
};
RootsOfUnity roots_of_unity(const FieldPtr& field);

unsigned long euler_phi(unsigned long n);

}  // namespace sepcert::nfield
