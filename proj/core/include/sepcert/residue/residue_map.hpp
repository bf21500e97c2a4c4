#pragma once

#include <vector>

#include "sepcert/nfield/matrix.hpp"
#include "sepcert/residue/finite_ring.hpp"

namespace sepcert::residue {

using nfield::FieldElement;
using nfield::FieldPtr;
using nfield::Matrix;

/// Entrywise reduction O_K[1/b] -> Z[x]/(g, q), alpha -> x.
class ResidueMap {
 public:
  ResidueMap(FieldPtr source, FiniteRing target, std::vector<Integer> avoid);

  const FieldPtr& source() const { return source_; }
  const FiniteRing& target() const { return target_; }
  const std::vector<Integer>& avoid() const { return avoid_; }

  /// Throws ResidueUndefined if a denominator is not invertible mod q.
  RingElem apply(const FieldElement& x) const;
  FiniteMatrix apply(const Matrix& m) const;
  bool defined_on(const FieldElement& x) const;

 private:
  FieldPtr source_;
  FiniteRing target_;
  std::vector<Integer> avoid_;
};

/// Z[x]/(f, q) after checking q against avoid and the discriminant guard.
ResidueMap build_residue_map(const FieldPtr& field, const Integer& q, const std::vector<Integer>& avoid);

/// Residue field map Z[x]/(g, p) for a monic irreducible factor g of f mod p.
ResidueMap build_residue_field_map(const FieldPtr& field, const Integer& p, const IntPoly& factor,
                                   const std::vector<Integer>& avoid);

/// True when g divides f mod q, i.e. alpha -> x is a ring homomorphism.
bool divides_mod(const IntPoly& g, const IntPoly& f, std::int64_t q);

/// Product of residue maps; a single map is the plain entrywise reduction.
struct HomDescription {
  std::vector<ResidueMap> components;
};

using ImageTuple = std::vector<FiniteMatrix>;

ImageTuple apply_matrix(const HomDescription& hom, const Matrix& m);
HomDescription product_hom(const std::vector<HomDescription>& maps);

/// Distinct prime factors of every denominator appearing in the matrices.
std::vector<Integer> denominator_primes(const std::vector<Matrix>& mats);

}  // namespace sepcert::residue
