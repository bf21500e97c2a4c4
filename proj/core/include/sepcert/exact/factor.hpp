#pragma once

#include <vector>

#include "sepcert/exact/integer.hpp"
#include "sepcert/exact/mod_poly.hpp"
#include "sepcert/exact/poly.hpp"

namespace sepcert::exact {

/// Squarefree decomposition over Q: pairs (primitive squarefree part,
/// multiplicity) with the product equal to f up to a rational scalar.
FactorList squarefree_rational(const IntPoly& f);

/// Complete factorization over Q (Zassenhaus: factor mod a good prime,
/// Hensel lift, recombine). Factors are primitive with positive leading
/// coefficient, sorted with poly_less; the constant content is dropped.
FactorList factor_rational(const IntPoly& f);

bool is_irreducible_over_q(const IntPoly& f);

/// Rational roots of f, ascending.
std::vector<Rational> rational_roots(const IntPoly& f);

}  // namespace sepcert::exact
