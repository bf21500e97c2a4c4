#include "sepcert/exact/mod_poly.hpp"

#include <algorithm>
#include <random>

#include "sepcert/error.hpp"

namespace sepcert::exact {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  Integer inv;
  if (!inverse_mod(Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(p)), inv))
    throw Error(ErrorCode::NotInvertible, "no inverse modulo " + std::to_string(p));
  return inv.get_ui();
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim();
}

ModPoly ModPoly::from_int(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  const Integer pz(static_cast<unsigned long>(p));
  for (const auto& x : f.coeffs()) c.push_back(mod(x, pz).get_ui());
  return ModPoly(p, std::move(c));
}

IntPoly ModPoly::to_int() const {
  std::vector<Integer> c;
  for (auto x : c_) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) {
    r[i] += b.c_[i];
    if (r[i] >= a.p_) r[i] -= a.p_;
  }
  return ModPoly(a.p_, std::move(r));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = (r[i] + a.p_ - b.c_[i]) % a.p_;
  return ModPoly(a.p_, std::move(r));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  return ModPoly(a.p_, std::move(r));
}

ModPoly ModPoly::derivative() const {
  std::vector<std::uint64_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
  return ModPoly(p_, std::move(d));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = invmod(leading(), p_);
  std::vector<std::uint64_t> c;
  for (auto x : c_) c.push_back(mulmod(x, inv, p_));
  return ModPoly(p_, std::move(c));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  const std::uint64_t p = a.modulus();
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {ModPoly(p), a};
  std::vector<std::uint64_t> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<std::uint64_t> quo(rem.size() - db, 0);
  const std::uint64_t inv = invmod(b.leading(), p);
  for (std::size_t i = rem.size(); i-- > db;) {
    const std::uint64_t f = mulmod(rem[i], inv, p);
    quo[i - db] = f;
    if (!f) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] + p - mulmod(f, bc[j], p)) % p;
  }
  rem.resize(db);
  return {ModPoly(p, std::move(quo)), ModPoly(p, std::move(rem))};
}

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
  ModPoly result(m.modulus(), {1});
  result = divmod(result, m).second;
  ModPoly b = divmod(base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
  }
  return result;
}

std::uint64_t leading_mod_p(const IntPoly& f, std::uint64_t p) {
  return ModPoly::from_int(f, p).leading();
}

namespace {

using Factors = std::vector<std::pair<ModPoly, unsigned>>;

Factors squarefree(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  Factors out;
  ModPoly c = gcd(f, f.derivative());
  ModPoly w = divmod(f, c).first;
  unsigned i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd(w, c);
    ModPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (!c.is_one() && c.degree() > 0) {
    // c is a p-th power; over F_p the Frobenius root just drops exponents.
    std::vector<std::uint64_t> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    for (auto& [g, e] : squarefree(ModPoly(p, std::move(root)))) out.emplace_back(g, e * static_cast<unsigned>(p));
  }
  return out;
}

std::vector<std::pair<ModPoly, unsigned>> distinct_degree(ModPoly g) {
  const std::uint64_t p = g.modulus();
  std::vector<std::pair<ModPoly, unsigned>> out;
  const ModPoly x(p, {0, 1});
  ModPoly h = x;
  unsigned i = 1;
  while (g.degree() >= 2 * static_cast<long>(i)) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), g);
    ModPoly d = gcd(g, h - x);
    if (!d.is_one()) {
      out.emplace_back(d, i);
      g = divmod(g, d).first;
      h = divmod(h, g).second;
    }
    ++i;
  }
  if (g.degree() > 0) out.emplace_back(g.monic(), static_cast<unsigned>(g.degree()));
  return out;
}

void equal_degree(const ModPoly& g, unsigned d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const std::uint64_t p = g.modulus();
  if (g.degree() == static_cast<long>(d)) {
    out.push_back(g.monic());
    return;
  }
  const Integer exponent = (ipow(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
  for (;;) {
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(g.degree()));
    for (auto& c : coeffs) c = rng() % p;
    ModPoly a(p, std::move(coeffs));
    if (a.degree() < 1) continue;
    ModPoly b(p);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) splits in characteristic 2.
      ModPoly t = a;
      b = a;
      for (unsigned k = 1; k < d; ++k) {
        t = divmod(t * t, g).second;
        b = b + t;
      }
    } else {
      b = powmod(a, exponent, g) - ModPoly(p, {1});
    }
    ModPoly f = gcd(g, b);
    if (f.degree() > 0 && f.degree() < g.degree()) {
      equal_degree(f, d, rng, out);
      equal_degree(divmod(g, f).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

FactorList factor_mod_p(const IntPoly& f, const Integer& p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  if (p >= (Integer(1) << 62)) throw Error(ErrorCode::InvalidArgument, "prime too large for factor_mod_p");
  const std::uint64_t pp = p.get_ui();
  ModPoly g = ModPoly::from_int(f, pp);
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial vanishes modulo " + p.get_str());
  FactorList out;
  if (g.degree() == 0) return out;
  std::mt19937_64 rng(0x5eedc0de);
  for (const auto& [sqf, mult] : squarefree(g.monic())) {
    for (const auto& [part, deg] : distinct_degree(sqf)) {
      std::vector<ModPoly> pieces;
      equal_degree(part, deg, rng, pieces);
      for (const auto& piece : pieces) out.emplace_back(piece.to_int(), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  return out;
}

}  // namespace sepcert::exact
