#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepcert/exact/integer.hpp"

namespace sepcert::exact {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
///
/// Coeff must be constructible from int and support + - * and ==. Division
/// helpers (divmod, gcd) additionally require Coeff to be a field.
template <class Coeff>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Coeff& a) { return Poly(std::vector<Coeff>{a}); }
  static Poly monomial(const Coeff& a, std::size_t deg) {
    std::vector<Coeff> c(deg + 1, zero_like(a));
    c[deg] = a;
    return Poly(std::move(c));
  }
  static Poly x() { return Poly(std::vector<Coeff>{Coeff(0), Coeff(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Coeff& leading() const { return c_.back(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& operator[](std::size_t i) const { return c_[i]; }

  Coeff eval(const Coeff& x) const {
    if (c_.empty()) return Coeff(0);
    Coeff acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Coeff(static_cast<int>(i)));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Coeff> r;
    r.reserve(a.c_.size());
    for (const auto& x : a.c_) r.push_back(-x);
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Coeff& s, const Poly& a) {
    std::vector<Coeff> r;
    r.reserve(a.c_.size());
    for (const auto& x : a.c_) r.push_back(s * x);
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

 private:
  static Coeff zero_like(const Coeff& a) { return a - a; }

  void trim() {
    while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

/// Quotient and remainder for polynomials over a field.
template <class Coeff>
std::pair<Poly<Coeff>, Poly<Coeff>> divmod(const Poly<Coeff>& a, const Poly<Coeff>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Coeff> rem = a.coeffs();
  if (a.degree() < b.degree()) return {Poly<Coeff>{}, a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Coeff> quo(rem.size() - db, rem.front() - rem.front());
  const Coeff inv_lead = Coeff(1) / b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    Coeff factor = rem[i] * inv_lead;
    quo[i - db] = factor;
    if (factor == Coeff(0)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - factor * b[j];
  }
  rem.resize(db);
  return {Poly<Coeff>(std::move(quo)), Poly<Coeff>(std::move(rem))};
}

template <class Coeff>
Poly<Coeff> monic(const Poly<Coeff>& a) {
  if (a.is_zero()) return a;
  return (Coeff(1) / a.leading()) * a;
}

/// Monic gcd over a field.
template <class Coeff>
Poly<Coeff> gcd(Poly<Coeff> a, Poly<Coeff> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class Coeff>
Poly<Coeff> pow(const Poly<Coeff>& a, unsigned e) {
  Poly<Coeff> r = Poly<Coeff>::constant(Coeff(1));
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

/// Content (positive gcd of coefficients) of an integer polynomial.
Integer content(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);
RatPoly to_rational(const IntPoly& f);
/// Scales by the lcm of denominators and takes the primitive part, keeping
/// the sign of the leading coefficient positive.
IntPoly primitive_integer(const RatPoly& f);

std::string to_string(const IntPoly& f, const std::string& var = "x");
std::string to_string(const RatPoly& f, const std::string& var = "x");

/// Deterministic ordering: by degree, then coefficient sequence from the
/// constant term upwards.
bool poly_less(const IntPoly& a, const IntPoly& b);

}  // namespace sepcert::exact
