#include "sepcert/exact/integer.hpp"

#include <cctype>
#include <string>

#include "sepcert/error.hpp"
#include "sepcert/exact/poly.hpp"

namespace sepcert::exact {

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  n = abs(n);
  if (n < 2) return out;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) throw Error(ErrorCode::Parse, "malformed rational '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error(ErrorCode::Parse, "malformed rational '" + s + "'");
    return Integer(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const Integer num = parse_int(s.substr(0, slash));
  const Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + s + "'");
  return make_rational(num, den);
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<Integer> c;
  for (const auto& x : f.coeffs()) c.push_back(x / g);
  return IntPoly(std::move(c));
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<Rational> c;
  for (const auto& x : f.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

IntPoly primitive_integer(const RatPoly& f) {
  Integer l = 1;
  for (const auto& x : f.coeffs()) l = lcm(l, x.get_den());
  std::vector<Integer> c;
  for (const auto& x : f.coeffs()) c.push_back(x.get_num() * (l / x.get_den()));
  return primitive_part(IntPoly(std::move(c)));
}

namespace {

template <class C>
std::string poly_string(const Poly<C>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const C& c = f[i];
    if (c == 0) continue;
    std::string cs = c.get_str();
    const bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const IntPoly& f, const std::string& var) { return poly_string(f, var); }
std::string to_string(const RatPoly& f, const std::string& var) { return poly_string(f, var); }

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace sepcert::exact
