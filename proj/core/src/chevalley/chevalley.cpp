#include "sepcert/chevalley/chevalley.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <unordered_map>

#include "sepcert/error.hpp"
#include "sepcert/exact/mod_poly.hpp"
#include "sepcert/residue/closure.hpp"

namespace sepcert::chevalley {

using units::FieldElement;

UnitStructure unit_structure(const units::UnitList& u) {
  UnitStructure s;
  const std::size_t m = u.units.size();
  if (m == 0) return s;
  const auto rel = units::exponent_lattice(u);
  if (rel.empty()) {
    s.free_generators = u.units;
    return s;
  }
  // With U*R*V = D, Z^m / rel = (+) Z/d_j on the rows of V^-1.
  const auto snf = exact::smith_normal_form(exact::IntMatrix::from_rows(rel, m));
  const auto vinv = exact::inverse_unimodular(snf.V);
  for (std::size_t j = 0; j < m; ++j) {
    const IntVector col = vinv.row(j);
    if (j < snf.rank) {
      const Integer dj = abs(snf.D(j, j));
      if (dj == 1) continue;
      if (s.torsion_generator) throw Error(ErrorCode::InvalidArgument, "torsion of a unit group must be cyclic");
      s.torsion_order = dj;
      s.torsion_generator = units::evaluate(u, col);
    } else {
      s.free_generators.push_back(units::evaluate(u, col));
    }
  }
  return s;
}

std::vector<Integer> unit_denominator_primes(const units::UnitList& u) {
  Integer l = 1;
  for (const auto& x : u.units) {
    l = exact::lcm(l, x.denominator());
    l = exact::lcm(l, x.inverse().denominator());
  }
  std::vector<Integer> out;
  for (const auto& [p, e] : exact::factor_integer(l)) out.push_back(p);
  return out;
}

KernelData unit_kernel(const UnitStructure& s, const residue::ResidueMap& map) {
  const auto& ring = map.target();
  std::vector<residue::RingElem> gens;
  gens.push_back(s.torsion_generator ? map.apply(*s.torsion_generator) : ring.one());
  for (const auto& y : s.free_generators) gens.push_back(map.apply(y));
  const std::size_t dim = gens.size();

  auto key = [](const residue::RingElem& e) {
    return std::string(reinterpret_cast<const char*>(e.data()), e.size() * sizeof(e[0]));
  };
  std::unordered_map<std::string, std::pair<residue::RingElem, IntVector>> table;
  table.emplace(key(ring.one()), std::make_pair(ring.one(), IntVector(dim)));
  KernelData out;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!ring.is_unit(gens[i])) throw Error(ErrorCode::NotInvertible, "unit maps to a non-unit mod " + std::to_string(ring.modulus()));
    // Smallest n with g_i^n in the subgroup generated so far.
    residue::RingElem cur = gens[i];
    long n = 1;
    while (true) {
      auto it = table.find(key(cur));
      if (it != table.end()) {
        IntVector rel(dim);
        for (std::size_t j = 0; j < dim; ++j) rel[j] = -it->second.second[j];
        rel[i] += n;
        out.basis.push_back(std::move(rel));
        break;
      }
      cur = ring.mul(cur, gens[i]);
      ++n;
    }
    std::vector<std::pair<residue::RingElem, IntVector>> base;
    for (const auto& [k, v] : table) base.push_back(v);
    residue::RingElem power = ring.one();
    for (long j = 1; j < n; ++j) {
      power = ring.mul(power, gens[i]);
      for (const auto& [elem, vec] : base) {
        IntVector v = vec;
        v[i] += j;
        residue::RingElem x = ring.mul(elem, power);
        std::string k = key(x);
        table.emplace(std::move(k), std::make_pair(std::move(x), std::move(v)));
      }
      if (table.size() > residue::kDefaultClosureCap) throw Error(ErrorCode::CapExceeded, "unit image too large");
    }
  }
  out.image_order = table.size();
  return out;
}

bool kernel_in_powers(const std::vector<IntVector>& kernel, const Integer& r, const Integer& w) {
  const Integer g = exact::gcd(r, w);
  for (const auto& v : kernel) {
    if (!mpz_divisible_p(v[0].get_mpz_t(), g.get_mpz_t())) return false;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!mpz_divisible_p(v[i].get_mpz_t(), r.get_mpz_t())) return false;
  }
  return true;
}

namespace {

struct Candidate {
  bool admissible = false;
  bool certified = false;
  KernelData kernel;
  Integer image_order = 1;
};

// Upper bound for the number of cyclic factors of (Z[x]/(f, q))^x whose
// order is divisible by l^a. For p not dividing the discriminant f splits
// into distinct factors mod p; each residue field gives a cyclic group of
// order p^k - 1, and 1 + pR has order p^(d(e-1)).
long factor_bound(const exact::IntPoly& f, const std::vector<std::pair<Integer, unsigned>>& qf, const Integer& l,
                  unsigned a) {
  const long d = f.degree();
  const Integer la = exact::ipow(l, a);
  long bound = 0;
  for (const auto& [p, e] : qf) {
    if (p == l) bound += d * static_cast<long>(e - 1);
    for (const auto& [g, mult] : exact::factor_mod_p(f, p)) {
      const Integer order = exact::ipow(p, static_cast<unsigned long>(g.degree())) - 1;
      if (mpz_divisible_p(order.get_mpz_t(), la.get_mpz_t())) bound += mult;
    }
  }
  return bound;
}

Candidate test_candidate(const units::UnitList& u, const UnitStructure& s, const Integer& r, const Integer& q,
                         const std::vector<Integer>& avoid) {
  Candidate c;
  for (const auto& a : avoid)
    if (exact::gcd(q, a) != 1) return c;
  if (exact::gcd(q, u.field->discriminant()) != 1) return c;
  c.admissible = true;
  // The image must surject onto U/U^r = C_gcd(r,w) x (C_r)^k, so for each
  // l^a || r it needs k cyclic factors of order divisible by l^a.
  const auto qf = exact::factor_integer(q);
  const auto& f = u.field->minimal_poly();
  const long k = static_cast<long>(s.free_generators.size());
  for (const auto& [l, a] : exact::factor_integer(r)) {
    const long torsion = mpz_divisible_p(s.torsion_order.get_mpz_t(), l.get_mpz_t()) ? 1 : 0;
    if (factor_bound(f, qf, l, 1) < k + torsion) return c;
    if (a > 1 && factor_bound(f, qf, l, a) < k) return c;
  }
  // Kernel mod q is the intersection of the kernels mod each p^e, which keeps
  // the enumerated tables small.
  const std::size_t dim = 1 + s.free_generators.size();
  std::optional<std::vector<IntVector>> kernel;
  for (const auto& [p, e] : qf) {
    const auto map = residue::build_residue_map(u.field, exact::ipow(p, e), avoid);
    auto part = unit_kernel(s, map).basis;
    kernel = kernel ? exact::lattice_intersection(*kernel, part, dim) : exact::lattice_basis(part, dim);
  }
  c.kernel.basis = kernel ? std::move(*kernel) : std::vector<IntVector>{};
  c.image_order = exact::lattice_index(c.kernel.basis, dim).value_or(Integer(0));
  c.certified = kernel_in_powers(c.kernel.basis, r, s.torsion_order);
  return c;
}

}  // namespace

ChevalleyModulus chevalley_modulus(const units::UnitList& u, const Integer& r, const std::vector<Integer>& avoid,
                                   const SearchOptions& opts) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  ChevalleyModulus out;
  out.r = r;
  out.structure = unit_structure(u);
  std::vector<Integer> all_avoid = avoid;
  for (const auto& p : unit_denominator_primes(u)) all_avoid.push_back(p);
  const unsigned jobs = std::max(1u, opts.jobs);
  for (long base = 2; base <= opts.search_limit; base += jobs) {
    std::vector<std::future<Candidate>> batch;
    const long end = std::min<long>(base + jobs - 1, opts.search_limit);
    for (long q = base; q <= end; ++q)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&, q] { return test_candidate(u, out.structure, r, Integer(q), all_avoid); }));
    // Futures are read in order, so the smallest certified q wins.
    std::optional<std::pair<long, Candidate>> hit;
    for (long q = base; q <= end; ++q) {
      Candidate c = batch[static_cast<std::size_t>(q - base)].get();
      if (hit) continue;
      if (!c.admissible) {
        ++out.skipped;
        continue;
      }
      ++out.tested;
      if (c.certified) hit = std::make_pair(q, std::move(c));
    }
    if (hit) {
      out.q = hit->first;
      out.kernel = std::move(hit->second.kernel.basis);
      out.image_order = hit->second.image_order;
      return out;
    }
  }
  throw Error(ErrorCode::ModulusNotFound, "no modulus up to " + std::to_string(opts.search_limit) + " (tested " +
                                              std::to_string(out.tested) + ", skipped " + std::to_string(out.skipped) + ")");
}

PowerResidueMap power_residue_map(const units::UnitList& u, const Integer& r, const std::vector<Integer>& avoid,
                                  const SearchOptions& opts) {
  PowerResidueMap out;
  out.modulus = chevalley_modulus(u, r, avoid, opts);
  std::vector<Integer> all_avoid = avoid;
  for (const auto& p : unit_denominator_primes(u)) all_avoid.push_back(p);
  std::sort(all_avoid.begin(), all_avoid.end());
  all_avoid.erase(std::unique(all_avoid.begin(), all_avoid.end()), all_avoid.end());
  out.hom.components.push_back(residue::build_residue_map(u.field, out.modulus.q, all_avoid));
  return out;
}

}  // namespace sepcert::chevalley
