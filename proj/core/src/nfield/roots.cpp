#include "sepcert/nfield/roots.hpp"

#include <algorithm>

#include "sepcert/error.hpp"
#include "sepcert/exact/factor.hpp"

namespace sepcert::nfield {

using exact::RatPoly;

namespace {

KPoly with_field(const KPoly& g, const FieldPtr& field) {
  std::vector<FieldElement> c;
  for (const auto& x : g.coeffs()) c.push_back(x.with_field(field));
  return KPoly(std::move(c));
}

KPoly squarefree_part(const KPoly& g) {
  const KPoly d = gcd(g, g.derivative());
  return monic(divmod(g, d).first);
}

// Newton interpolation through (xs[i], ys[i]).
RatPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  RatPoly p = RatPoly::constant(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) p = p * RatPoly{-xs[i], Rational(1)} + RatPoly::constant(ys[i]);
  return p;
}

bool is_squarefree(const RatPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

std::vector<FieldElement> sort_desc(std::vector<FieldElement> roots) {
  std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) { return lex_less(b, a); });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

KPoly to_kpoly(const IntPoly& f, const FieldPtr& field) {
  std::vector<FieldElement> c;
  for (const auto& x : f.coeffs()) c.push_back(FieldElement(Rational(x)).with_field(field));
  return KPoly(std::move(c));
}

KPoly shift(const KPoly& g, const FieldElement& s) {
  KPoly result;
  const KPoly lin{s, FieldElement(1)};
  for (std::size_t i = g.size(); i-- > 0;) result = result * lin + KPoly::constant(g[i]);
  return result;
}

RatPoly norm_poly(const KPoly& g, const FieldPtr& field) {
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "norm of the zero polynomial");
  const KPoly G = with_field(g, field);
  const std::size_t deg = static_cast<std::size_t>(G.degree()) * field->degree();
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= deg; ++t) {
    xs.emplace_back(static_cast<long>(t));
    ys.push_back(G.eval(FieldElement(Rational(static_cast<long>(t))).with_field(field)).norm());
  }
  return interpolate(xs, ys);
}

std::vector<FieldElement> roots_in_field(const KPoly& g, const FieldPtr& field) {
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  if (g.degree() < 1) return {};
  const KPoly sf = squarefree_part(with_field(g, field));
  std::vector<FieldElement> roots;
  if (field->degree() == 1) {
    std::vector<Rational> c;
    for (const auto& x : sf.coeffs()) c.push_back(x.coords()[0]);
    for (const auto& r : exact::rational_roots(exact::primitive_integer(RatPoly(std::move(c)))))
      roots.push_back(FieldElement(r).with_field(field));
    return sort_desc(std::move(roots));
  }
  // Trager: shift until the norm is squarefree, factor over Q, and pull the
  // K-factors back with gcds.
  const FieldElement a = FieldElement::alpha(field);
  for (long k = 0; k < 64; ++k) {
    const FieldElement ka = FieldElement(Rational(k)) * a;
    const KPoly shifted = shift(sf, -ka);  // sf(x - k*alpha)
    const RatPoly n = norm_poly(shifted, field);
    if (!is_squarefree(n)) continue;
    for (const auto& [fac, mult] : exact::factor_rational(exact::primitive_integer(n))) {
      if (static_cast<std::size_t>(fac.degree()) > field->degree()) continue;
      const KPoly h = gcd(shifted, to_kpoly(fac, field));
      if (h.degree() != 1) continue;
      // Root c of the shifted polynomial gives root c - k*alpha of sf.
      const FieldElement c = -(h[0] / h[1]);
      roots.push_back(c - ka);
    }
    for (const auto& r : roots)
      if (!sf.eval(r).is_zero()) throw Error(ErrorCode::InvalidArgument, "root check failed for " + r.to_string());
    return sort_desc(std::move(roots));
  }
  throw Error(ErrorCode::InvalidArgument, "no squarefree norm shift found");
}

IntPoly obstruction_factor(const KPoly& g, const FieldPtr& field) {
  const auto fac = exact::factor_rational(exact::primitive_integer(norm_poly(g, field)));
  for (const auto& [f, m] : fac)
    if (f.degree() >= 1) return f;
  throw Error(ErrorCode::InvalidArgument, "constant polynomial has no obstruction factor");
}

IntPoly cyclotomic(unsigned long w) {
  if (w == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index 0");
  RatPoly num = RatPoly::monomial(Rational(1), w) - RatPoly::constant(Rational(1));
  for (unsigned long e = 1; e < w; ++e)
    if (w % e == 0) num = divmod(num, exact::to_rational(cyclotomic(e))).first;
  return exact::primitive_integer(num);
}

RootsOfUnity roots_of_unity(const FieldPtr& field) {
  const unsigned long d = field->degree();
  // phi(w) <= d forces w <= 2 d^2 + 2 (phi(w) >= sqrt(w/2)).
  for (unsigned long w = 2 * d * d + 2; w >= 2; --w) {
    if (w % 2 || d % euler_phi(w)) continue;
    const auto roots = roots_in_field(to_kpoly(cyclotomic(w), field), field);
    if (!roots.empty()) return {roots.front(), w};
  }
  return {FieldElement(-1).with_field(field), 2};
}

}  // namespace sepcert::nfield
