#pragma once

#include <optional>
#include <vector>

#include "sepcert/error.hpp"
#include "sepcert/exact/int_matrix.hpp"
#include "sepcert/nfield/matrix.hpp"
#include "sepcert/residue/residue_map.hpp"

namespace sepcert::separator {

using exact::Integer;
using exact::IntVector;
using nfield::FieldElement;
using nfield::FieldPtr;
using nfield::GroupDescription;
using nfield::Matrix;

class NotUnipotentFreeError : public Error {
 public:
  NotUnipotentFreeError(Matrix witness, IntVector exponents)
      : Error(ErrorCode::NotUnipotentFree, "nontrivial unipotent element " + witness.to_string()),
        witness_(std::move(witness)),
        exponents_(std::move(exponents)) {}
  const Matrix& witness() const { return witness_; }
  const IntVector& exponents() const { return exponents_; }

 private:
  Matrix witness_;
  IntVector exponents_;
};

/// prod gens_i^{e_i}, left to right.
Matrix word(const std::vector<Matrix>& gens, const IntVector& e);

/// Entry (s,s) of every generator, moved into `field`.
std::vector<FieldElement> diagonal_column(const std::vector<Matrix>& gens, std::size_t s, const FieldPtr& field);

/// {e : prod g_i^{e_i} has every diagonal entry 1} for upper triangular,
/// pairwise commuting generators.
std::vector<IntVector> character_kernel(const std::vector<Matrix>& tri_gens, const FieldPtr& field, long bound);

/// Triangularizes H and checks that the character kernel only produces the
/// identity. Throws NotUnipotentFreeError with the first nontrivial word.
void check_unipotent_free(const GroupDescription& H, long bound);

/// Representatives of Z^m / L for a full rank lattice L, via the Smith form.
std::vector<IntVector> quotient_reps(const std::vector<IntVector>& lat, std::size_t m);

/// S+ = kernel of the diagonal character, S1 of finite index with S1/S+ free.
struct SplitS {
  std::vector<Matrix> s_plus;
  std::vector<Matrix> s1;                // free part generators (S+ not included)
  std::vector<IntVector> s1_exponents;
  std::vector<Matrix> coset_reps;        // S = union r * S1
  std::vector<IntVector> rep_exponents;
};
SplitS split_s_plus(const std::vector<Matrix>& tri_gens, const FieldPtr& field, long bound);

/// Exponents e with prod g_i^{e_i} = x, for triangular commuting generators.
/// Unipotent parts are solved through the matrix logarithm; NotApplicable when
/// those logarithms are linearly dependent.
std::optional<IntVector> membership(const std::vector<Matrix>& tri_gens, const Matrix& x, const FieldPtr& field,
                                    long bound);

struct BorelSeparation {
  Integer p;
  std::size_t row = 0, col = 0;
  residue::HomDescription hom;
};

/// Smallest admissible prime keeping the first lower entry of h nonzero, so
/// h leaves the upper triangular image. NotApplicable for triangular h.
BorelSeparation separate_from_borel(const Matrix& h, const FieldPtr& field, const std::vector<Integer>& avoid);

}  // namespace sepcert::separator
