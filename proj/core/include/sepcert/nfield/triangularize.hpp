#pragma once

#include <variant>

#include "sepcert/error.hpp"
#include "sepcert/nfield/matrix.hpp"

namespace sepcert::nfield {

/// Raised when eigenvalues leave K. Carries the offending Q-irreducible
/// factor so callers can adjoin it.
class NeedsExtension : public Error {
 public:
  explicit NeedsExtension(IntPoly factor)
      : Error(ErrorCode::NeedsFieldExtension, "eigenvalues need " + exact::to_string(factor)), factor_(std::move(factor)) {}
  const IntPoly& factor() const { return factor_; }

 private:
  IntPoly factor_;
};

struct Obstruction {
  IntPoly factor;
};

/// Throws NotCommuting unless all pairs commute.
void require_commuting(const std::vector<Matrix>& gens);

/// Common eigenvector of pairwise commuting matrices, or the irreducible
/// factor blocking one. Eigenvalues are picked in descending lex order.
std::variant<Vector, Obstruction> common_eigenvector(const std::vector<Matrix>& gens, const FieldPtr& field);

struct Triangularization {
  Matrix P;
  GroupDescription conjugated;  // P^-1 g P for each generator
};

/// Simultaneous upper triangularization of an abelian group. Throws
/// NeedsExtension or NotCommuting.
Triangularization triangularize_abelian(const GroupDescription& group);

/// Same for a bare matrix list, returning P only.
Matrix triangularizing_matrix(const std::vector<Matrix>& gens, const FieldPtr& field);

/// Q[x]/(f) for irreducible f of degree >= 2 over a base field that must be Q.
FieldPtr extend_by_rational_root(const IntPoly& f, const FieldPtr& base);

/// Coefficient-wise embedding of a rational matrix into K.
Matrix embed(const Matrix& m, const FieldPtr& field);
GroupDescription embed(const GroupDescription& g, const FieldPtr& field);

}  // namespace sepcert::nfield
