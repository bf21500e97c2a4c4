#include "sepcert/residue/residue_map.hpp"

#include <algorithm>

#include "sepcert/error.hpp"

namespace sepcert::residue {

namespace {

void check_coprime(const FieldPtr& field, const Integer& q, const std::vector<Integer>& avoid) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  for (const auto& a : avoid)
    if (exact::gcd(q, a) != 1)
      throw Error(ErrorCode::ResidueUndefined, "modulus " + q.get_str() + " shares a factor with " + a.get_str());
  if (exact::gcd(q, field->discriminant()) != 1)
    throw Error(ErrorCode::ResidueUndefined,
                "modulus " + q.get_str() + " shares a factor with the discriminant " + field->discriminant().get_str());
  if (!q.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "modulus too large");
}

}  // namespace

ResidueMap::ResidueMap(FieldPtr source, FiniteRing target, std::vector<Integer> avoid)
    : source_(std::move(source)), target_(std::move(target)), avoid_(std::move(avoid)) {}

bool ResidueMap::defined_on(const FieldElement& x) const {
  return exact::gcd(x.denominator(), Integer(static_cast<long>(target_.modulus()))) == 1;
}

RingElem ResidueMap::apply(const FieldElement& x) const {
  const Integer q(static_cast<long>(target_.modulus()));
  std::vector<Integer> c;
  for (const auto& r : x.coords()) {
    Integer inv;
    if (!exact::inverse_mod(r.get_den(), q, inv))
      throw Error(ErrorCode::ResidueUndefined, "denominator " + r.get_den().get_str() + " not invertible mod " + q.get_str());
    c.push_back(exact::mod(r.get_num() * inv, q));
  }
  return target_.reduce(IntPoly(std::move(c)));
}

FiniteMatrix ResidueMap::apply(const Matrix& m) const {
  FiniteMatrix out{m.size(), {}};
  for (const auto& x : m.entries()) out.entries.push_back(apply(x));
  return out;
}

ResidueMap build_residue_map(const FieldPtr& field, const Integer& q, const std::vector<Integer>& avoid) {
  check_coprime(field, q, avoid);
  return ResidueMap(field, FiniteRing(q.get_si(), field->minimal_poly()), avoid);
}

bool divides_mod(const IntPoly& g, const IntPoly& f, std::int64_t q) {
  // Monic long division mod q.
  const FiniteRing ring(q, g);
  return ring.is_zero(ring.reduce(f));
}

ResidueMap build_residue_field_map(const FieldPtr& field, const Integer& p, const IntPoly& factor,
                                   const std::vector<Integer>& avoid) {
  check_coprime(field, p, avoid);
  if (!exact::is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  if (!divides_mod(factor, field->minimal_poly(), p.get_si()))
    throw Error(ErrorCode::InvalidArgument, exact::to_string(factor) + " does not divide the minimal polynomial mod " + p.get_str());
  return ResidueMap(field, FiniteRing(p.get_si(), factor), avoid);
}

ImageTuple apply_matrix(const HomDescription& hom, const Matrix& m) {
  ImageTuple out;
  for (const auto& c : hom.components) out.push_back(c.apply(m));
  return out;
}

HomDescription product_hom(const std::vector<HomDescription>& maps) {
  HomDescription out;
  for (const auto& h : maps)
    for (const auto& c : h.components) {
      if (!out.components.empty() && !out.components.front().source()->same_as(*c.source()))
        throw Error(ErrorCode::MixedFields, "product of maps with different source fields");
      out.components.push_back(c);
    }
  if (out.components.empty()) throw Error(ErrorCode::InvalidArgument, "empty product homomorphism");
  return out;
}

std::vector<Integer> denominator_primes(const std::vector<Matrix>& mats) {
  Integer l = 1;
  for (const auto& m : mats) l = exact::lcm(l, m.denominator());
  std::vector<Integer> out;
  for (const auto& [p, e] : exact::factor_integer(l)) out.push_back(p);
  return out;
}

}  // namespace sepcert::residue
