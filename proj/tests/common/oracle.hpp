#pragma once

// Brute-force checks written against plain integers, sharing no code with
// the residue module beyond the input types.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "sepcert/nfield/matrix.hpp"

namespace oracle {

using Elem = std::vector<std::int64_t>;  // coefficients mod (g, q), ascending

inline std::int64_t md(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t q) {
  a = md(a, q);
  for (std::int64_t x = 1; x < q; ++x)
    if (static_cast<__int128>(a) * x % q == 1) return x;
  return -1;
}

/// x^k mod (g, q) by repeated multiplication; g monic of degree d given ascending.
struct Ring {
  std::int64_t q;
  std::vector<std::int64_t> g;  // ascending, monic
  std::size_t d() const { return g.size() - 1; }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<__int128> prod(2 * d(), 0);
    for (std::size_t i = 0; i < d(); ++i)
      for (std::size_t j = 0; j < d(); ++j) prod[i + j] += static_cast<__int128>(a[i]) * b[j] % q;
    for (std::size_t k = prod.size(); k-- > d();) {
      const __int128 c = prod[k] % q;
      prod[k] = 0;
      for (std::size_t i = 0; i < d(); ++i) prod[k - d() + i] -= c * g[i];
    }
    Elem out(d());
    for (std::size_t i = 0; i < d(); ++i) out[i] = md(static_cast<std::int64_t>(prod[i] % q), q);
    return out;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem out(d());
    for (std::size_t i = 0; i < d(); ++i) out[i] = md(a[i] + b[i], q);
    return out;
  }
  /// Reduction of a field element written in the power basis of alpha -> x.
  Elem reduce(const sepcert::nfield::FieldElement& x) const {
    const auto& c = x.coords();
    Elem acc(d(), 0), power(d(), 0);
    power[0] = 1;
    Elem xpow(d(), 0);
    if (d() > 1) xpow[1] = 1;
    else xpow[0] = md(-g[0], q);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::int64_t num = static_cast<std::int64_t>(mpz_fdiv_ui(c[i].get_num().get_mpz_t(), q));
      const std::int64_t den = inv_mod(static_cast<std::int64_t>(mpz_fdiv_ui(c[i].get_den().get_mpz_t(), q)), q);
      Elem term = power;
      for (auto& t : term) t = md(static_cast<std::int64_t>(static_cast<__int128>(t) * num % q * den % q), q);
      acc = add(acc, term);
      power = mul(power, xpow);
    }
    return acc;
  }
};

using Mat = std::vector<Elem>;  // n*n entries row-major

inline Mat reduce(const Ring& r, const sepcert::nfield::Matrix& m) {
  Mat out;
  for (const auto& e : m.entries()) out.push_back(r.reduce(e));
  return out;
}

inline Mat mul(const Ring& r, const Mat& a, const Mat& b, std::size_t n) {
  Mat out(n * n, Elem(r.d(), 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i * n + j] = r.add(out[i * n + j], r.mul(a[i * n + k], b[k * n + j]));
  return out;
}

/// Tuple of matrices, one per ring.
using Tuple = std::vector<Mat>;

/// Plain BFS closure under multiplication; returns false if it exceeds cap.
inline bool closure(const std::vector<Ring>& rings, std::size_t n, const std::vector<Tuple>& gens, std::set<Tuple>& out,
                    std::size_t cap = 2'000'000) {
  Tuple id;
  for (const auto& r : rings) {
    Mat m(n * n, Elem(r.d(), 0));
    for (std::size_t i = 0; i < n; ++i) m[i * n + i][0] = 1;
    id.push_back(m);
  }
  out = {id};
  std::vector<Tuple> frontier{id};
  while (!frontier.empty()) {
    std::vector<Tuple> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Tuple y;
        for (std::size_t c = 0; c < rings.size(); ++c) y.push_back(mul(rings[c], x[c], g[c], n));
        if (out.insert(y).second) {
          next.push_back(std::move(y));
          if (out.size() > cap) return false;
        }
      }
    frontier = std::move(next);
  }
  return true;
}

/// g | f in (Z/q)[x] for monic g, both ascending.
inline bool divides(const std::vector<std::int64_t>& g, std::vector<std::int64_t> f, std::int64_t q) {
  for (auto& c : f) c = md(c, q);
  const std::size_t dg = g.size() - 1;
  if (g.empty() || md(g.back(), q) != 1) return false;
  while (f.size() > dg) {
    const std::int64_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = md(static_cast<std::int64_t>((f[shift + i] - static_cast<__int128>(c) * g[i]) % q), q);
    f.pop_back();
  }
  for (auto c : f)
    if (c != 0) return false;
  return true;
}

/// Units of Q given as fractions. For <U> = C_w x Z^k, a modulus q works for
/// r exactly when |phi(U) / phi(U)^r| = gcd(r, w) r^k, since that quotient is
/// U / U^r K. Everything is enumerated inside (Z/q)^x.
inline bool chevalley_works(const std::vector<std::pair<std::int64_t, std::int64_t>>& units, std::int64_t q,
                            std::int64_t r, std::int64_t w, int k) {
  std::vector<std::int64_t> gens;
  for (const auto& [num, den] : units) {
    const std::int64_t d = inv_mod(den, q);
    if (d < 0 || inv_mod(num, q) < 0) return false;
    gens.push_back(md(static_cast<std::int64_t>(static_cast<__int128>(md(num, q)) * d % q), q));
  }
  std::set<std::int64_t> group{1 % q};
  std::vector<std::int64_t> frontier{1 % q};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto x : frontier)
      for (auto g : gens) {
        const std::int64_t y = static_cast<std::int64_t>(static_cast<__int128>(x) * g % q);
        if (group.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::set<std::int64_t> powers;
  for (auto x : group) {
    std::int64_t y = 1 % q;
    for (std::int64_t i = 0; i < r; ++i) y = static_cast<std::int64_t>(static_cast<__int128>(y) * x % q);
    powers.insert(y);
  }
  std::int64_t want = std::gcd(r, w);
  for (int i = 0; i < k; ++i) want *= r;
  return static_cast<std::int64_t>(group.size() / powers.size()) == want;
}

/// Smallest q >= 2 at which every unit is invertible and the check above holds.
inline std::int64_t smallest_chevalley(const std::vector<std::pair<std::int64_t, std::int64_t>>& units, std::int64_t r,
                                       std::int64_t w, int k, std::int64_t limit) {
  for (std::int64_t q = 2; q <= limit; ++q)
    if (chevalley_works(units, q, r, w, k)) return q;
  return -1;
}

}  // namespace oracle
