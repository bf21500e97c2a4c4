#include "sepcert/exact/factor.hpp"

#include <algorithm>

#include "sepcert/error.hpp"

namespace sepcert::exact {

namespace {

IntPoly mod_poly(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c;
  for (const auto& x : f.coeffs()) c.push_back(mod(x, m));
  return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& f, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> c;
  for (const auto& x : f.coeffs()) {
    Integer r = mod(x, m);
    if (r > half) r -= m;
    c.push_back(r);
  }
  return IntPoly(std::move(c));
}

// Exact division over Z; returns false if b does not divide a.
bool divides_exactly(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) return false;
  std::vector<Integer> c;
  for (const auto& x : q.coeffs()) {
    if (x.get_den() != 1) return false;
    c.push_back(x.get_num());
  }
  quotient = IntPoly(std::move(c));
  return true;
}

struct ModSplit {
  ModPoly s, t;  // s*g + t*h = 1 mod p
};

ModSplit bezout(const ModPoly& g, const ModPoly& h) {
  const std::uint64_t p = g.modulus();
  ModPoly r0 = g, r1 = h;
  ModPoly s0(p, {1}), s1(p), t0(p), t1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::InvalidArgument, "Hensel factors not coprime");
  const ModPoly inv(p, {invmod(r0.leading(), p)});
  return {s0 * inv, t0 * inv};
}

// Lifts target = g*h mod p to mod p^k, g monic. target is given mod p^k.
void hensel_lift(const IntPoly& target, IntPoly& g, IntPoly& h, std::uint64_t p, unsigned k) {
  const ModPoly gp = ModPoly::from_int(g, p), hp = ModPoly::from_int(h, p);
  const ModSplit st = bezout(gp, hp);
  const Integer P(static_cast<unsigned long>(p));
  const Integer Pk = ipow(P, k);
  Integer pj = P;
  for (unsigned j = 1; j < k; ++j) {
    IntPoly diff = mod_poly(target - g * h, Pk);
    std::vector<Integer> ec;
    for (const auto& x : diff.coeffs()) {
      if (!mpz_divisible_p(x.get_mpz_t(), pj.get_mpz_t()))
        throw Error(ErrorCode::InvalidArgument, "Hensel lifting invariant violated");
      ec.push_back(x / pj);
    }
    const ModPoly e = ModPoly::from_int(IntPoly(std::move(ec)), p);
    auto [q, r] = divmod(st.t * e, gp);
    const ModPoly dh = st.s * e + q * hp;
    g = mod_poly(g + pj * r.to_int(), Pk);
    h = mod_poly(h + pj * dh.to_int(), Pk);
    pj *= P;
  }
}

FactorList factor_squarefree_primitive(const IntPoly& f) {
  const long n = f.degree();
  if (n <= 1) return {{f, 1}};
  const Integer lc = f.leading();

  // Pick the prime with the fewest modular factors among a handful of
  // candidates where f stays squarefree of full degree.
  std::uint64_t best_p = 0;
  FactorList best;
  unsigned tried = 0;
  for (std::uint64_t p = 3; p < 2000 && tried < 8; p += 2) {
    if (!is_prime(Integer(static_cast<unsigned long>(p)))) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    const ModPoly fp = ModPoly::from_int(f, p);
    if (gcd(fp, fp.derivative()).degree() != 0) continue;
    ++tried;
    auto fac = factor_mod_p(f, Integer(static_cast<unsigned long>(p)));
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) return {{f, 1}};
  }
  if (best_p == 0) throw Error(ErrorCode::InvalidArgument, "no good prime for factorization");

  // Mignotte-type bound on factor coefficients.
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  const Integer bound = ipow(Integer(2), static_cast<unsigned long>(n)) * (root + 1) * abs(lc);
  const Integer P(static_cast<unsigned long>(best_p));
  unsigned k = 1;
  Integer pk = P;
  while (pk <= 2 * bound) {
    pk *= P;
    ++k;
  }

  // Sequential Hensel lifting of lc * g1 * ... * gr.
  std::vector<IntPoly> lifted;
  IntPoly rest_target = mod_poly(f, pk);
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    IntPoly g = best[i].first;
    ModPoly hp = ModPoly(best_p, {leading_mod_p(f, best_p)});
    for (std::size_t j = i + 1; j < best.size(); ++j) hp = hp * ModPoly::from_int(best[j].first, best_p);
    IntPoly h = hp.to_int();
    hensel_lift(rest_target, g, h, best_p, k);
    lifted.push_back(g);
    rest_target = h;
  }
  {
    // The last monic factor is rest_target / lc mod p^k.
    Integer lc_inv;
    inverse_mod(lc, pk, lc_inv);
    lifted.push_back(mod_poly(lc_inv * rest_target, pk));
  }

  // Recombination over subsets of increasing size.
  FactorList out;
  IntPoly remaining = f;
  std::vector<IntPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<bool> mask(pool.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(s), true);
    do {
      const Integer rlc = remaining.leading();
      IntPoly prod = IntPoly::constant(rlc);
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask[i]) prod = mod_poly(prod * pool[i], pk);
      IntPoly cand = primitive_part(symmetric_mod(prod, pk));
      IntPoly quo;
      if (cand.degree() > 0 && divides_exactly(remaining, cand, quo)) {
        out.emplace_back(cand, 1);
        remaining = quo;
        std::vector<IntPoly> next;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (!mask[i]) next.push_back(pool[i]);
        pool = std::move(next);
        found = true;
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!found) ++s;
  }
  if (remaining.degree() > 0) out.emplace_back(primitive_part(remaining), 1);
  return out;
}

}  // namespace

FactorList squarefree_rational(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "squarefree decomposition of zero");
  FactorList out;
  if (f.degree() == 0) return out;
  const RatPoly F = to_rational(f);
  RatPoly c = gcd(F, F.derivative());
  RatPoly w = divmod(F, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    RatPoly y = gcd(w, c);
    RatPoly z = divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(primitive_integer(z), i);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  return out;
}

FactorList factor_rational(const IntPoly& f) {
  FactorList out;
  for (const auto& [part, mult] : squarefree_rational(f)) {
    for (auto& [fac, e] : factor_squarefree_primitive(part)) out.emplace_back(fac, mult * e);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  return out;
}

bool is_irreducible_over_q(const IntPoly& f) {
  if (f.degree() < 1) return false;
  const auto fac = factor_rational(f);
  return fac.size() == 1 && fac[0].second == 1;
}

std::vector<Rational> rational_roots(const IntPoly& f) {
  std::vector<Rational> roots;
  for (const auto& [fac, mult] : factor_rational(f))
    if (fac.degree() == 1) roots.push_back(make_rational(-fac[0], fac[1]));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace sepcert::exact
