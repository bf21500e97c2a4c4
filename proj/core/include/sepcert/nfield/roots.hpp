#pragma once

#include <vector>

#include "sepcert/nfield/number_field.hpp"

namespace sepcert::nfield {

/// g(x + s).
KPoly shift(const KPoly& g, const FieldElement& s);

/// Norm of g from K[x] down to Q[x], i.e. the product of all conjugates of g.
/// Computed by evaluating at integer points and interpolating.
exact::RatPoly norm_poly(const KPoly& g, const FieldPtr& field);

/// Distinct roots of g lying in K, sorted in descending lex order so that
/// e.g. diag(2,1) yields 2 before 1.
std::vector<FieldElement> roots_in_field(const KPoly& g, const FieldPtr& field);

/// Smallest (poly_less) Q-irreducible factor of the norm of g; reported when
/// g has no root in K.
IntPoly obstruction_factor(const KPoly& g, const FieldPtr& field);

/// w-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned long w);

/// Lifts rational or field-coefficient polynomials into K[x].
KPoly to_kpoly(const IntPoly& f, const FieldPtr& field);

}  // namespace sepcert::nfield
