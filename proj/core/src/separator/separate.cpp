#include "sepcert/separator/separate.hpp"

#include <algorithm>

#include "sepcert/nfield/triangularize.hpp"

namespace sepcert::separator {

namespace {

void check_inputs(const GroupDescription& gamma, const GroupDescription& H, const Matrix& h) {
  gamma.validate();
  H.validate();
  if (!gamma.field || !H.field || !gamma.field->same_as(*H.field))
    throw Error(ErrorCode::MixedFields, "Gamma and H must share a field");
  if (H.n != gamma.n || h.size() != gamma.n) throw Error(ErrorCode::InvalidArgument, "matrix sizes differ");
  if (!h.is_invertible()) throw Error(ErrorCode::NotInvertible, "h is singular");
}

std::vector<Integer> all_denominator_primes(const std::vector<Matrix>& mats) {
  std::vector<Matrix> with_inv;
  for (const auto& m : mats) {
    with_inv.push_back(m);
    with_inv.push_back(m.inverse());
  }
  return residue::denominator_primes(with_inv);
}

Matrix triangular_basis(const GroupDescription& H) {
  if (H.generators.empty()) return Matrix::identity(H.n);
  return nfield::triangularize_abelian(H).P;
}

}  // namespace

bool in_abelian_subgroup(const GroupDescription& H, const Matrix& h, long bound) {
  const Matrix P = triangular_basis(H);
  const Matrix Pinv = P.inverse();
  std::vector<Matrix> tri;
  for (const auto& g : H.matrices()) tri.push_back(Pinv * g * P);
  return membership(tri, Pinv * h * P, H.field, bound).has_value();
}

SeparationResult separate_abelian(const GroupDescription& gamma, const GroupDescription& H, const Matrix& h,
                                  const Options& opts) {
  InductionTrace trace;
  return separate_abelian(gamma, H, h, opts, trace);
}

SeparationResult separate_abelian(const GroupDescription& gamma, const GroupDescription& H, const Matrix& h,
                                  const Options& opts, InductionTrace& trace) {
  check_inputs(gamma, H, h);
  const FieldPtr field = gamma.field;
  nfield::require_commuting(H.matrices());
  check_unipotent_free(H, opts.relation_bound);

  const Matrix P = triangular_basis(H);
  const Matrix Pinv = P.inverse();
  std::vector<Matrix> h_tri;
  for (const auto& g : H.matrices()) h_tri.push_back(Pinv * g * P);
  const Matrix x = Pinv * h * P;
  if (x.is_upper_triangular() && membership(h_tri, x, field, opts.relation_bound))
    throw Error(ErrorCode::InSubgroup, "h lies in H");

  std::vector<Matrix> everything = gamma.matrices();
  for (const auto& g : H.matrices()) everything.push_back(g);
  everything.push_back(h);
  everything.push_back(P);
  const std::vector<Integer> avoid = all_denominator_primes(everything);

  SeparationResult out;
  auto finish = [&](const residue::HomDescription& hom, const char* method) {
    auto cert = try_certificate(hom, gamma, H, h, opts.closure_cap);
    if (!cert) return false;
    cert->method = method;
    if (!P.is_identity()) cert->conjugator = P;
    out.certificate = std::move(*cert);
    return true;
  };

  if (opts.fast_path) {
    const std::size_t cap = std::min<std::size_t>(opts.closure_cap, 100'000);
    for (Integer q = 2; q <= opts.fast_prime_limit; q = exact::next_prime(q)) {
      if (exact::gcd(q, field->discriminant()) != 1) continue;
      if (std::any_of(avoid.begin(), avoid.end(), [&](const Integer& a) { return exact::gcd(q, a) != 1; })) continue;
      residue::HomDescription hom;
      hom.components.push_back(residue::build_residue_map(field, q, avoid));
      try {
        auto cert = try_certificate(hom, gamma, H, h, cap);
        if (!cert) continue;
        cert->method = "fast";
        if (!P.is_identity()) cert->conjugator = P;
        out.certificate = std::move(*cert);
        return out;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
      }
    }
  }

  if (!x.is_upper_triangular()) {
    const auto b = separate_from_borel(x, field, avoid);
    if (!finish(b.hom, "borel")) throw Error(ErrorCode::FallbackExhausted, "Borel quotient did not separate");
    return out;
  }

  InductionContext ctx;
  ctx.field = field;
  ctx.avoid = avoid;
  ctx.opts = opts;
  ctx.trace = &trace;
  for (const auto& g : gamma.matrices()) {
    Matrix c = Pinv * g * P;
    if (c.is_upper_triangular()) ctx.gamma_triangular.push_back(std::move(c));
  }
  const auto hom = separate_in_group(h_tri, x, ctx);
  out.trace = trace;
  if (!finish(hom, "induction")) throw Error(ErrorCode::FallbackExhausted, "induction map did not separate h from H");
  return out;
}

SeparationCertificate finite_index_lift(const GroupDescription& gamma, const GroupDescription& H,
                                        const GroupDescription& H_prime, const std::vector<Matrix>& reps,
                                        const Matrix& h, const std::vector<SeparationCertificate>& certs,
                                        const Options& opts) {
  check_inputs(gamma, H, h);
  if (reps.size() != certs.size() || reps.empty())
    throw Error(ErrorCode::InvalidArgument, "need one certificate per coset representative");
  std::vector<residue::HomDescription> parts;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Matrix y = reps[i].inverse() * h;
    if (in_abelian_subgroup(H_prime, y, opts.relation_bound))
      throw Error(ErrorCode::CosetMembership, "representative " + std::to_string(i) + " puts h in H'");
    parts.push_back(certs[i].hom);
  }
  auto cert = try_certificate(residue::product_hom(parts), gamma, H, h, opts.closure_cap);
  if (!cert) throw Error(ErrorCode::InvalidArgument, "representatives do not cover H");
  cert->method = "lift";
  return *cert;
}

}  // namespace sepcert::separator
