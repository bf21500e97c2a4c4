#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sepcert/exact/integer.hpp"

namespace sepcert::exact {

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix. Zero-row or zero-column shapes are
/// rejected at construction.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  /// Builds from row vectors; all rows must share the length `cols`.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

IntVector operator*(const IntMatrix& a, const IntVector& v);

/// Exact determinant (Bareiss fraction-free elimination). Square only.
Integer determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix D, U, V;
  /// Number of nonzero diagonal entries.
  std::size_t rank = 0;
};

/// U*A*V = D with D diagonal, d1 | d2 | ..., all d_i >= 0, U and V unimodular.
SmithForm smith_normal_form(const IntMatrix& A);

/// Row-style Hermite normal form of the row lattice of A: nonzero rows only,
/// echelon with positive pivots and entries above each pivot reduced into
/// [0, pivot).
std::vector<IntVector> hermite_rows(const std::vector<IntVector>& generators, std::size_t dim);

/// Basis of {v : A*v = 0} over Z, via the Smith form.
std::vector<IntVector> lattice_kernel(const IntMatrix& A);

/// Reduced basis of the lattice spanned by `generators` (HNF rows).
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t dim);

/// Saturation (Q-span intersected with Z^dim) of the lattice spanned by
/// `generators`.
std::vector<IntVector> saturate(const std::vector<IntVector>& generators, std::size_t dim);

/// Index [Z^dim : L] for the lattice spanned by `generators`, or nullopt if
/// L has rank < dim.
std::optional<Integer> lattice_index(const std::vector<IntVector>& generators, std::size_t dim);

/// Integer coefficients c with sum c_i * basis_i = target, if they exist.
std::optional<IntVector> solve_in_lattice(const std::vector<IntVector>& basis, const IntVector& target);

inline bool lattice_contains(const std::vector<IntVector>& basis, const IntVector& v) {
  return solve_in_lattice(basis, v).has_value();
}

/// Intersection of two lattices in Z^dim.
std::vector<IntVector> lattice_intersection(const std::vector<IntVector>& a,
                                            const std::vector<IntVector>& b, std::size_t dim);

/// Inverse of a matrix with determinant +-1; throws NotInvertible otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Sign normalization used for deterministic kernel output: the last
/// nonzero entry is made positive.
IntVector normalize_sign(IntVector v);

bool is_zero(const IntVector& v);

}  // namespace sepcert::exact
