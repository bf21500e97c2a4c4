#include "sepcert/units/units.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sepcert/error.hpp"

namespace sepcert::units {

using exact::IntMatrix;

namespace {

constexpr double kMaxBox = 1e7;

std::size_t rank_of(const std::vector<IntVector>& gens, std::size_t dim) {
  return exact::hermite_rows(gens, dim).size();
}

std::vector<IntVector> standard_basis(std::size_t m) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

IntVector combine(const std::vector<IntVector>& basis, const IntVector& coeffs, std::size_t dim) {
  IntVector v(dim);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) v[i] += coeffs[j] * basis[j][i];
  return v;
}

// Lattice of exponents whose product has norm +-1.
std::vector<IntVector> norm_valuation_lattice(const UnitList& u) {
  const std::size_t m = u.units.size();
  std::vector<Integer> primes;
  std::vector<exact::Rational> norms;
  for (const auto& x : u.units) {
    if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero is not a unit");
    norms.push_back(x.norm());
    for (const Integer& part : {norms.back().get_num(), norms.back().get_den()})
      for (const auto& [p, e] : exact::factor_integer(abs(part)))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  if (primes.empty()) return standard_basis(m);
  std::sort(primes.begin(), primes.end());
  IntMatrix v(primes.size(), m);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      exact::Rational r = norms[j];
      long val = 0;
      Integer num = abs(r.get_num()), den = r.get_den();
      while (mpz_divisible_p(num.get_mpz_t(), primes[i].get_mpz_t())) num /= primes[i], ++val;
      while (mpz_divisible_p(den.get_mpz_t(), primes[i].get_mpz_t())) den /= primes[i], --val;
      v(i, j) = val;
    }
  return exact::lattice_kernel(v);
}

struct TorsionData {
  std::vector<IntVector> lattice;  // L_T basis in exponent space
  std::vector<unsigned long> logs;  // element of L_T basis = zeta^log
  nfield::RootsOfUnity mu;
};

TorsionData torsion_data(const UnitList& u) {
  if (u.units.empty()) throw Error(ErrorCode::InvalidArgument, "empty unit list");
  const std::size_t m = u.units.size();
  TorsionData td;
  td.mu = nfield::roots_of_unity(u.field);
  const auto vn = norm_valuation_lattice(u);
  if (u.field->degree() == 1) {
    td.lattice = vn;
  } else if (!vn.empty()) {
    // Bounded search for c with prod W_j^{c_j} torsion, W_j = u^{vn_j}.
    const std::size_t k = vn.size();
    const long B = u.relation_bound;
    if (std::pow(2.0 * static_cast<double>(B) + 1.0, static_cast<double>(k)) > kMaxBox)
      throw Error(ErrorCode::BoundExceeded, "relation search box (2*" + std::to_string(B) + "+1)^" + std::to_string(k) + " too large");
    std::vector<std::vector<FieldElement>> table(k);
    for (std::size_t j = 0; j < k; ++j) {
      const FieldElement y = evaluate(u, vn[j]).pow(Integer(static_cast<unsigned long>(td.mu.order)));
      const FieldElement yinv = y.inverse();
      std::vector<FieldElement> row(static_cast<std::size_t>(2 * B + 1));
      row[static_cast<std::size_t>(B)] = FieldElement(1).with_field(u.field);
      for (long t = 1; t <= B; ++t) {
        row[static_cast<std::size_t>(B + t)] = row[static_cast<std::size_t>(B + t - 1)] * y;
        row[static_cast<std::size_t>(B - t)] = row[static_cast<std::size_t>(B - t + 1)] * yinv;
      }
      table[j] = std::move(row);
    }
    std::vector<IntVector> found;
    IntVector c(k);
    // First nonzero coordinate positive: each line through 0 is visited once.
    std::function<void(std::size_t, const FieldElement&, bool)> dfs = [&](std::size_t j, const FieldElement& acc, bool nonzero) {
      if (j == k) {
        if (nonzero && acc.is_one()) found.push_back(c);
        return;
      }
      for (long t = nonzero ? -B : 0; t <= B; ++t) {
        c[j] = t;
        dfs(j + 1, t == 0 ? acc : acc * table[j][static_cast<std::size_t>(B + t)], nonzero || t != 0);
      }
      c[j] = 0;
    };
    dfs(0, FieldElement(1).with_field(u.field), false);
    for (const auto& cs : exact::saturate(found, k)) td.lattice.push_back(combine(vn, cs, m));
    td.lattice = exact::hermite_rows(td.lattice, m);
  }
  for (const auto& e : td.lattice) {
    const FieldElement x = evaluate(u, e);
    FieldElement z = FieldElement(1).with_field(u.field);
    unsigned long k = 0;
    while (k < td.mu.order && !(z == x)) {
      z = z * td.mu.generator;
      ++k;
    }
    if (k == td.mu.order) throw Error(ErrorCode::InvalidArgument, "torsion relation does not evaluate to a root of unity");
    td.logs.push_back(k);
  }
  return td;
}

}  // namespace

FieldElement evaluate(const UnitList& u, const IntVector& e) {
  FieldElement acc = FieldElement(1).with_field(u.field);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) acc = acc * u.units[i].pow(e[i]);
  return acc;
}

std::vector<IntVector> torsion_lattice(const UnitList& u) { return torsion_data(u).lattice; }

std::vector<IntVector> exponent_lattice(const UnitList& u) {
  const TorsionData td = torsion_data(u);
  const std::size_t m = u.units.size();
  const std::size_t r = td.lattice.size();
  if (r == 0) return {};
  IntMatrix row(1, r + 1);
  for (std::size_t i = 0; i < r; ++i) row(0, i) = static_cast<long>(td.logs[i]);
  row(0, r) = static_cast<long>(td.mu.order);
  std::vector<IntVector> gens;
  for (const auto& k : exact::lattice_kernel(row)) gens.push_back(combine(td.lattice, k, m));
  return exact::hermite_rows(gens, m);
}

Torsion torsion_order(const UnitList& u) {
  const TorsionData td = torsion_data(u);
  const std::size_t m = u.units.size();
  const Integer w(static_cast<unsigned long>(td.mu.order));
  // Combination of the logs reaching gcd(logs): a_i with sum a_i k_i = g'.
  Integer g = 0;
  IntVector a(td.logs.size());
  for (std::size_t i = 0; i < td.logs.size(); ++i) {
    const auto eg = exact::ext_gcd(g, Integer(static_cast<unsigned long>(td.logs[i])));
    for (std::size_t j = 0; j < i; ++j) a[j] *= eg.s;
    a[i] = eg.t;
    g = eg.g;
  }
  const auto eg = exact::ext_gcd(g, w);  // s g + t w = gcd(g, w)
  Torsion t;
  t.order = w / eg.g;
  if (t.order == 1) return t;
  for (auto& x : a) x *= eg.s;
  t.generator_exponents = combine(td.lattice, a, m);
  t.generator = evaluate(u, t.generator_exponents);
  const auto ord = nfield::is_root_of_unity(*t.generator);
  if (!ord || Integer(*ord) != t.order) throw Error(ErrorCode::InvalidArgument, "torsion generator has the wrong order");
  return t;
}

UnitBasis free_basis(const UnitList& u) {
  const std::size_t m = u.units.size();
  UnitBasis b;
  b.torsion = torsion_order(u);
  b.relations = exponent_lattice(u);
  std::vector<IntVector> span = torsion_lattice(u);
  const auto e = standard_basis(m);
  std::size_t rank = rank_of(span, m);
  for (std::size_t i = 0; i < m; ++i) {
    span.push_back(e[i]);
    const std::size_t r = rank_of(span, m);
    if (r > rank) {
      rank = r;
      b.indices.push_back(i);
    } else {
      span.pop_back();
    }
  }
  if (b.indices.empty()) throw Error(ErrorCode::AllTorsion, "every unit is a root of unity");
  std::vector<IntVector> gens = b.relations;
  for (auto i : b.indices) {
    IntVector v(m);
    v[i] = b.torsion.order;
    b.generator_exponents.push_back(v);
    b.generators.push_back(u.units[i].pow(b.torsion.order));
    gens.push_back(std::move(v));
  }
  const auto idx = exact::lattice_index(gens, m);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "free basis does not have full rank");
  b.index = *idx;
  return b;
}

IntVector discrete_log(const UnitList& u, const FieldElement& x) {
  const std::size_t m = u.units.size();
  if (x.is_one()) return IntVector(m);
  for (std::size_t i = 0; i < m; ++i)
    if (u.units[i] == x) {
      IntVector v(m);
      v[i] = 1;
      return v;
    }
  UnitList ext = u;
  ext.units.push_back(x);
  Integer g = 0;
  IntVector acc(m + 1);
  for (const auto& rel : exponent_lattice(ext)) {
    const auto eg = exact::ext_gcd(g, rel[m]);
    for (std::size_t i = 0; i <= m; ++i) acc[i] = eg.s * acc[i] + eg.t * rel[i];
    g = eg.g;
  }
  if (g != 1) throw Error(ErrorCode::NotInLattice, x.to_string() + " is not in the generated unit group");
  IntVector e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = -acc[i];
  if (!(evaluate(u, e) == x)) throw Error(ErrorCode::NotInLattice, "discrete log check failed for " + x.to_string());
  return e;
}

Complement complement_subgroup(const UnitList& ambient, const std::vector<FieldElement>& g_gens) {
  const std::size_t m = ambient.units.size();
  Complement c;
  c.ambient_relations = exponent_lattice(ambient);
  for (const auto& z : g_gens) c.g_exponents.push_back(discrete_log(ambient, z));
  std::vector<IntVector> sub = c.ambient_relations;
  sub.insert(sub.end(), c.g_exponents.begin(), c.g_exponents.end());
  const std::size_t sub_rank = rank_of(sub, m);

  // Prefer standard generators when they complement the saturation exactly.
  std::vector<IntVector> t;
  {
    std::vector<IntVector> span = sub;
    std::size_t rank = sub_rank;
    for (const auto& e : standard_basis(m)) {
      if (rank == m) break;
      span.push_back(e);
      const std::size_t r = rank_of(span, m);
      if (r > rank) {
        rank = r;
        t.push_back(e);
      } else {
        span.pop_back();
      }
    }
    std::vector<IntVector> check = exact::saturate(sub, m);
    check.insert(check.end(), t.begin(), t.end());
    const auto idx = exact::lattice_index(check, m);
    if (!idx || *idx != 1) {
      t.clear();
      if (sub_rank == 0) {
        t = standard_basis(m);
      } else {
        const auto s = exact::smith_normal_form(IntMatrix::from_rows(exact::hermite_rows(sub, m), m));
        const auto vinv = exact::inverse_unimodular(s.V);
        for (std::size_t j = s.rank; j < m; ++j) t.push_back(vinv.row(j));
      }
    }
  }
  c.generator_exponents = t;
  for (const auto& v : t) c.generators.push_back(evaluate(ambient, v));
  std::vector<IntVector> all = sub;
  all.insert(all.end(), t.begin(), t.end());
  const auto idx = exact::lattice_index(all, m);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "complement does not reach full rank");
  c.index = *idx;
  return c;
}

PowerDecomposition decompose_power(const FieldElement& nu, const Integer& d, const UnitList& ambient,
                                   const Complement& t, const std::vector<FieldElement>& g_gens) {
  const std::size_t m = ambient.units.size();
  IntVector target = discrete_log(ambient, nu);
  for (auto& x : target) x *= d;
  std::vector<IntVector> basis = t.generator_exponents;
  basis.insert(basis.end(), t.g_exponents.begin(), t.g_exponents.end());
  basis.insert(basis.end(), t.ambient_relations.begin(), t.ambient_relations.end());
  const auto sol = exact::solve_in_lattice(basis, target);
  if (!sol) throw Error(ErrorCode::NotInProduct, nu.to_string() + "^" + d.get_str() + " is not in T*G");
  PowerDecomposition out;
  const std::size_t nt = t.generator_exponents.size();
  IntVector kappa_exp(m);
  for (std::size_t j = 0; j < nt; ++j) {
    out.t_exponents.push_back((*sol)[j]);
    for (std::size_t i = 0; i < m; ++i) kappa_exp[i] += (*sol)[j] * t.generator_exponents[j][i];
  }
  for (std::size_t j = 0; j < g_gens.size(); ++j) out.q.push_back((*sol)[nt + j]);
  out.kappa = evaluate(ambient, kappa_exp);
  FieldElement rhs = out.kappa;
  for (std::size_t j = 0; j < g_gens.size(); ++j) rhs = rhs * g_gens[j].pow(out.q[j]);
  if (!(rhs == nu.pow(d))) throw Error(ErrorCode::NotInProduct, "decomposition check failed");
  return out;
}

}  // namespace sepcert::units
