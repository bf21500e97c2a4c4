#include "sepcert/separator/induction.hpp"

#include "sepcert/chevalley/chevalley.hpp"
#include "sepcert/residue/closure.hpp"
#include "sepcert/units/units.hpp"

namespace sepcert::separator {

namespace {

using residue::HomDescription;

bool separates(const HomDescription& hom, const std::vector<Matrix>& gens, const Matrix& x, std::size_t cap) {
  std::vector<residue::ImageTuple> imgs;
  for (const auto& g : gens) imgs.push_back(residue::apply_matrix(hom, g));
  const auto closure = residue::group_closure(residue::rings_of(hom), x.size(), imgs, cap);
  return !closure.contains(residue::apply_matrix(hom, x));
}

void push_unique(std::vector<FieldElement>& list, const FieldElement& u) {
  if (u.is_one()) return;
  for (const auto& v : list)
    if (v == u) return;
  list.push_back(u);
}

HomDescription separate_free(const std::vector<Matrix>& basis, const Matrix& x, InductionContext& ctx,
                             std::size_t depth);

struct Normalized {
  std::size_t pivot = 0;
  units::UnitBasis ub;
  std::vector<Matrix> gbar;           // one per basis element, in order
  std::vector<IntVector> exponents;   // of gbar in the basis
  bool normalized = true;
};

Normalized normalize(const std::vector<Matrix>& basis, const FieldPtr& field, long bound) {
  const std::size_t m = basis.size();
  Normalized out;
  bool found = false;
  for (std::size_t s = 0; s < basis[0].size() && !found; ++s) {
    try {
      out.ub = units::free_basis({field, diagonal_column(basis, s, field), bound});
      out.pivot = s;
      found = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AllTorsion) throw;
    }
  }
  if (!found) throw Error(ErrorCode::NotUnipotentFree, "free generators with torsion diagonal");
  const std::size_t s = out.pivot;
  const Integer& p = out.ub.torsion.order;
  const Integer& D = out.ub.index;
  const units::UnitList zlist{field, out.ub.generators, bound};
  out.gbar.resize(m);
  out.exponents.resize(m);
  std::vector<bool> in_i(m, false);
  for (std::size_t i : out.ub.indices) in_i[i] = true;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m);
    if (in_i[i]) {
      e[i] = p;
    } else {
      // lambda_t^D lies in <z_i>; strip that part off.
      const auto c = units::discrete_log(zlist, basis[i](s, s).with_field(field).pow(D));
      e[i] = D;
      for (std::size_t j = 0; j < out.ub.indices.size(); ++j) e[out.ub.indices[j]] -= p * c[j];
    }
    out.gbar[i] = word(basis, e);
    out.exponents[i] = e;
    if (!in_i[i] && !out.gbar[i](s, s).is_one()) out.normalized = false;
  }
  return out;
}

std::vector<FieldElement> ambient_units(const InductionContext& ctx, const std::vector<Matrix>& basis,
                                        const Matrix& y, std::size_t s, bool enlarged) {
  std::vector<FieldElement> list;
  const auto& field = ctx.field;
  push_unique(list, nfield::roots_of_unity(field).generator.with_field(field));
  for (const auto& g : basis) push_unique(list, g(s, s).with_field(field));
  push_unique(list, y(s, s).with_field(field));
  if (!enlarged) return list;
  for (std::size_t r = 0; r < y.size(); ++r) {
    for (const auto& g : ctx.gamma_triangular) push_unique(list, g(r, r).with_field(field));
    for (const auto& g : basis) push_unique(list, g(r, r).with_field(field));
    push_unique(list, y(r, r).with_field(field));
  }
  return list;
}

// Case analysis for y against S-bar = <gbar>.
HomDescription separate_normalized(const std::vector<Matrix>& basis, const Normalized& nz, const Matrix& y,
                                   InductionContext& ctx, std::size_t depth) {
  const std::size_t m = basis.size();
  const std::size_t s = nz.pivot;
  const auto& field = ctx.field;
  const auto& ub = nz.ub;
  InductionNode node;
  node.depth = depth;
  node.rank = m;
  node.pivot = s;
  node.p = ub.torsion.order;
  node.D = ub.index;
  node.I = ub.indices;
  node.normalized = nz.normalized;
  node.gbar = nz.gbar;
  node.gbar_exponents = nz.exponents;
  node.sbar_index = exact::lattice_index(nz.exponents, m).value_or(Integer(0));
  node.index_bound = exact::ipow(node.p, ub.indices.size()) * exact::ipow(node.D, m - ub.indices.size());

  std::vector<bool> in_i(m, false);
  for (std::size_t i : ub.indices) in_i[i] = true;
  const FieldElement nu = y(s, s).with_field(field);

  for (std::size_t attempt = 0; attempt < 2; ++attempt) {
    node.retries = attempt;
    const units::UnitList ambient{field, ambient_units(ctx, basis, y, s, attempt > 0), ctx.opts.relation_bound};
    node.ambient_size = ambient.units.size();
    const auto comp = units::complement_subgroup(ambient, ub.generators);
    const Integer d = comp.index;
    const auto dec = units::decompose_power(nu, d, ambient, comp, ub.generators);
    node.d = d;
    node.q = dec.q;
    {
      FieldElement rhs = dec.kappa;
      for (std::size_t j = 0; j < ub.generators.size(); ++j) rhs *= ub.generators[j].pow(dec.q[j]);
      node.decomposition = (nu.pow(d) == rhs);
    }
    bool case1 = false;
    for (const auto& qj : dec.q)
      if (!mpz_divisible_p(qj.get_mpz_t(), d.get_mpz_t())) case1 = true;

    HomDescription hom;
    try {
      if (case1) {
        node.case_id = 1;
        const auto pr = chevalley::power_residue_map(ambient, d, ctx.avoid, ctx.opts.search());
        node.modulus = pr.modulus.q;
        hom = pr.hom;
      } else {
        node.case_id = 2;
        // ybar = prod_{i in I} gbar_i^{-q_i/d} * y, separated from S_I = <gbar_t : t not in I>.
        Matrix ybar = y;
        for (std::size_t j = 0; j < ub.indices.size(); ++j) {
          const Integer k = -dec.q[j] / d;
          if (k != 0) ybar = nz.gbar[ub.indices[j]].pow(k) * ybar;
        }
        std::vector<Matrix> rest;
        for (std::size_t t = 0; t < m; ++t)
          if (!in_i[t]) rest.push_back(nz.gbar[t]);
        const HomDescription inner = separate_free(rest, ybar, ctx, depth + 1);
        Integer ell_over_d = 1;
        const auto rings = residue::rings_of(inner);
        for (std::size_t i : ub.indices)
          ell_over_d = exact::lcm(ell_over_d,
                                  Integer(static_cast<unsigned long>(residue::element_order(
                                      rings, residue::apply_matrix(inner, nz.gbar[i]), ctx.opts.closure_cap))));
        node.ell = d * ell_over_d;
        const auto pr = chevalley::power_residue_map(ambient, node.ell, ctx.avoid, ctx.opts.search());
        node.modulus = pr.modulus.q;
        hom = residue::product_hom({pr.hom, inner});
      }
    } catch (const Error&) {
      // Keep the routing data of a node whose modulus search gave up.
      if (ctx.trace) ctx.trace->nodes.push_back(node);
      throw;
    }
    if (separates(hom, nz.gbar, y, ctx.opts.closure_cap)) {
      if (ctx.trace) ctx.trace->nodes.push_back(node);
      return hom;
    }
  }
  if (ctx.trace) ctx.trace->nodes.push_back(node);
  throw Error(ErrorCode::FallbackExhausted, "induction certificate failed after enlarging the ambient units");
}

HomDescription combine(const std::vector<HomDescription>& parts) {
  if (parts.size() == 1) return parts[0];
  return residue::product_hom(parts);
}

HomDescription separate_free(const std::vector<Matrix>& basis, const Matrix& x, InductionContext& ctx,
                             std::size_t depth) {
  if (basis.empty()) {
    if (ctx.trace) {
      InductionNode node;
      node.depth = depth;
      ctx.trace->nodes.push_back(node);
    }
    return separate_from_identity(x, ctx);
  }
  const Normalized nz = normalize(basis, ctx.field, ctx.opts.relation_bound);
  // S-bar has finite index in S: separate every r^-1 x from S-bar.
  std::vector<HomDescription> parts;
  for (const auto& r : quotient_reps(nz.exponents, basis.size())) {
    const Matrix y = word(basis, r).inverse() * x;
    parts.push_back(separate_normalized(basis, nz, y, ctx, depth));
  }
  HomDescription hom = combine(parts);
  if (parts.size() > 1 && !separates(hom, basis, x, ctx.opts.closure_cap))
    throw Error(ErrorCode::FallbackExhausted, "coset product failed to separate");
  return hom;
}

}  // namespace

HomDescription separate_from_identity(const Matrix& x, const InductionContext& ctx) {
  if (x.is_identity()) throw Error(ErrorCode::InSubgroup, "identity cannot be separated from the trivial group");
  const auto& field = ctx.field;
  for (Integer q = 2; q <= ctx.opts.search_limit; q = exact::next_prime(q)) {
    bool ok = exact::gcd(q, field->discriminant()) == 1;
    for (const auto& a : ctx.avoid)
      if (exact::gcd(q, a) != 1) ok = false;
    if (!ok) continue;
    HomDescription hom;
    hom.components.push_back(residue::build_residue_map(field, q, ctx.avoid));
    const auto img = residue::apply_matrix(hom, x);
    if (img != residue::identity(residue::rings_of(hom), x.size())) return hom;
  }
  throw Error(ErrorCode::ModulusNotFound, "no prime up to the search limit keeps x away from 1");
}

HomDescription separate_in_group(const std::vector<Matrix>& gens, const Matrix& x, InductionContext& ctx,
                                 std::size_t depth) {
  std::vector<Matrix> nontrivial;
  for (const auto& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);
  if (nontrivial.empty()) return separate_free({}, x, ctx, depth);
  const SplitS split = split_s_plus(nontrivial, ctx.field, ctx.opts.relation_bound);
  if (!split.s_plus.empty()) throw NotUnipotentFreeError(split.s_plus[0], {});
  std::vector<HomDescription> parts;
  for (const auto& r : split.coset_reps) parts.push_back(separate_free(split.s1, r.inverse() * x, ctx, depth));
  HomDescription hom = combine(parts);
  if (!separates(hom, nontrivial, x, ctx.opts.closure_cap))
    throw Error(ErrorCode::FallbackExhausted, "torsion coset product failed to separate");
  return hom;
}

}  // namespace sepcert::separator
