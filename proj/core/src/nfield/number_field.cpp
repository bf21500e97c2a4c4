#include "sepcert/nfield/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "sepcert/error.hpp"
#include "sepcert/exact/factor.hpp"
#include "sepcert/exact/int_matrix.hpp"

namespace sepcert::nfield {

namespace {

Integer polynomial_discriminant(const IntPoly& f) {
  const long n = f.degree();
  if (n <= 1) return 1;
  const IntPoly df = f.derivative();
  const long m = df.degree();
  // Sylvester matrix of f and f'.
  const auto size = static_cast<std::size_t>(n + m);
  exact::IntMatrix s(size, size);
  for (long r = 0; r < m; ++r)
    for (long i = 0; i <= n; ++i) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + n - i)) = f[static_cast<std::size_t>(i)];
  for (long r = 0; r < n; ++r)
    for (long i = 0; i <= m; ++i)
      s(static_cast<std::size_t>(m + r), static_cast<std::size_t>(r + m - i)) = df[static_cast<std::size_t>(i)];
  Integer res = exact::determinant(s);
  if ((n * (n - 1) / 2) % 2) res = -res;
  return res / f.leading();
}

std::vector<Rational> reduce_product(const std::vector<Rational>& prod, const IntPoly& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  std::vector<Rational> c = prod;
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    const Rational top = c[i];
    c[i] = 0;
    // x^i = x^(i-d) * x^d and x^d = -sum_{j<d} f_j x^j (f monic).
    for (std::size_t j = 0; j < d; ++j) c[i - d + j] -= top * f[j];
  }
  c.resize(d);
  return c;
}

}  // namespace

NumberField::NumberField(IntPoly f) : f_(std::move(f)), disc_(polynomial_discriminant(f_)) {}

FieldPtr NumberField::create(const IntPoly& minimal_poly) {
  if (minimal_poly.degree() < 1 || minimal_poly.leading() != 1)
    throw Error(ErrorCode::Reducible, "minimal polynomial must be monic of degree >= 1: " + exact::to_string(minimal_poly));
  if (minimal_poly.degree() > 1 && !exact::is_irreducible_over_q(minimal_poly))
    throw Error(ErrorCode::Reducible, exact::to_string(minimal_poly) + " is reducible over Q");
  return FieldPtr(new NumberField(minimal_poly));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField(IntPoly{0, 1}));
  return q;
}

std::string NumberField::to_string() const {
  if (is_rationals()) return "Q";
  return "Q[a]/(" + exact::to_string(f_, "a") + ")";
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) {
    if (coords_.empty()) coords_.push_back(0);
    if (std::any_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return r != 0; }))
      throw Error(ErrorCode::InvalidArgument, "scalar field element with non-constant coordinates");
    coords_.resize(1);
    return;
  }
  const std::size_t d = field_->degree();
  if (coords_.size() > d) coords_ = reduce_product(coords_, field_->minimal_poly());
  coords_.resize(d, Rational(0));
  for (auto& c : coords_) c.canonicalize();
}

FieldElement FieldElement::alpha(const FieldPtr& field) {
  std::vector<Rational> c(field->degree(), Rational(0));
  if (field->degree() == 1) {
    c[0] = -Rational(field->minimal_poly()[0]);
  } else {
    c[1] = 1;
  }
  return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return r == 0; });
}

bool FieldElement::is_one() const { return is_rational() && coords_[0] == 1; }

Integer FieldElement::denominator() const {
  Integer l = 1;
  for (const auto& c : coords_) l = exact::lcm(l, c.get_den());
  return l;
}

FieldPtr common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() && b.field()) {
    if (a.field() != b.field() && !a.field()->same_as(*b.field()))
      throw Error(ErrorCode::MixedFields, "elements of different number fields");
    return a.field();
  }
  return a.field() ? a.field() : b.field();
}

FieldElement FieldElement::with_field(const FieldPtr& f) const {
  if (field_ || !f) return *this;
  std::vector<Rational> c(f->degree(), Rational(0));
  c[0] = coords_[0];
  return FieldElement(f, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const FieldPtr f = common_field(a, b);
  const FieldElement x = a.with_field(f), y = b.with_field(f);
  std::vector<Rational> c(x.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords_[i] + y.coords_[i];
  return FieldElement(f, std::move(c));
}

FieldElement operator-(const FieldElement& a) {
  std::vector<Rational> c;
  for (const auto& r : a.coords_) c.push_back(-r);
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldPtr f = common_field(a, b);
  if (!f) return FieldElement(Rational(a.coords_[0] * b.coords_[0]));
  const FieldElement x = a.with_field(f), y = b.with_field(f);
  std::vector<Rational> prod(x.coords_.size() + y.coords_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (x.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coords_.size(); ++j) prod[i + j] += x.coords_[i] * y.coords_[j];
  }
  return FieldElement(f, reduce_product(prod, f->minimal_poly()));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::NotInvertible, "inverse of zero field element");
  if (!field_ || field_->degree() == 1) {
    std::vector<Rational> c{1 / coords_[0]};
    return FieldElement(field_, std::move(c));
  }
  // Extended Euclid in Q[x]: s*a + t*f = 1.
  using exact::RatPoly;
  RatPoly r0(coords_), r1 = exact::to_rational(field_->minimal_poly());
  RatPoly s0 = RatPoly::constant(Rational(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = exact::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since f is irreducible.
  const Rational inv_c = 1 / r0[0];
  std::vector<Rational> c;
  for (const auto& v : s0.coeffs()) c.push_back(v * inv_c);
  return FieldElement(field_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  const auto& x = a.coords_;
  const auto& y = b.coords_;
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational xi = i < x.size() ? x[i] : Rational(0);
    const Rational yi = i < y.size() ? y[i] : Rational(0);
    if (xi != yi) return false;
  }
  return true;
}

FieldElement FieldElement::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(Integer(-e));
  FieldElement result = FieldElement(1).with_field(field_);
  FieldElement base = *this;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
  }
  return result;
}

std::vector<std::vector<Rational>> FieldElement::multiplication_matrix() const {
  const std::size_t d = field_ ? field_->degree() : 1;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> basis(d, Rational(0));
    basis[j] = 1;
    const FieldElement col = *this * (field_ ? FieldElement(field_, basis) : FieldElement(basis[0]));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords_[i];
  }
  return m;
}

Rational FieldElement::norm() const {
  auto m = multiplication_matrix();
  const std::size_t d = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t p = k;
    while (p < d && m[p][k] == 0) ++p;
    if (p == d) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < d; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < d; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return coords_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    std::string c = coords_[i].get_str();
    const bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != "1") os << c << '*';
      os << 'a';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

bool lex_less(const FieldElement& a, const FieldElement& b) {
  const auto& x = a.coords();
  const auto& y = b.coords();
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational xi = i < x.size() ? x[i] : Rational(0);
    const Rational yi = i < y.size() ? y[i] : Rational(0);
    if (xi != yi) return xi < yi;
  }
  return false;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::optional<unsigned long> is_root_of_unity(const FieldElement& u) {
  if (u.is_zero()) throw Error(ErrorCode::InvalidArgument, "is_root_of_unity of zero");
  const Rational n = u.norm();
  if (n != 1 && n != -1) return std::nullopt;
  const unsigned long d = u.field() ? u.field()->degree() : 1;
  const unsigned long limit = 2 * d * d + 2;
  FieldElement power = u;
  for (unsigned long w = 1; w <= limit; ++w) {
    // power == u^w here.
    if (euler_phi(w) <= d && power.is_one()) return w;
    power = power * u;
  }
  return std::nullopt;
}

}  // namespace sepcert::nfield
