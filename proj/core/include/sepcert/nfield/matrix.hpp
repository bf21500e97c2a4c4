#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sepcert/nfield/number_field.hpp"

namespace sepcert::nfield {

using Vector = std::vector<FieldElement>;

/// Square matrix over a number field, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<FieldElement> entries);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<FieldElement>& d);
  /// Rational matrix from integer rows, for tests and literals.
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  /// Columns given as vectors.
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t size() const { return n_; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  const std::vector<FieldElement>& entries() const { return a_; }

  /// First field attached to any entry (null if all entries are scalars).
  FieldPtr field() const;
  Matrix with_field(const FieldPtr& f) const;

  Vector column(std::size_t c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix scaled(const FieldElement& s) const;
  FieldElement determinant() const;
  FieldElement trace() const;
  bool is_invertible() const { return !determinant().is_zero(); }
  Matrix inverse() const;
  /// Integer power; negative exponents use the inverse.
  Matrix pow(const Integer& e) const;
  Matrix pow(long e) const { return pow(Integer(e)); }

  bool is_identity() const;
  bool is_upper_triangular() const;
  /// First nonzero strictly-lower entry in row-major order, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_lower_entry() const;
  std::vector<FieldElement> diagonal_entries() const;

  /// lcm of denominators over all entry coordinates.
  Integer denominator() const;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<FieldElement> a_;
};

/// Rectangular helper for kernel and basis computations: list of rows.
using Rows = std::vector<Vector>;

/// Kernel of the linear map given by `rows` (each row has `cols` entries).
/// Basis vectors come from the reduced row echelon form: one per free
/// column in increasing order, with that free variable set to 1.
std::vector<Vector> kernel(const Rows& rows, std::size_t cols);

/// Coordinates x with sum_j x_j * basis_j = target, if target is in the span.
std::optional<Vector> coordinates_in_span(const std::vector<Vector>& basis, const Vector& target);

/// det(xI - M) via Faddeev-LeVerrier (exact in characteristic zero).
KPoly char_poly(const Matrix& m);

bool commute(const Matrix& a, const Matrix& b);

/// True iff (M - I)^n = 0.
bool is_unipotent(const Matrix& m);

struct LabeledMatrix {
  std::string label;
  Matrix matrix;
};

/// Finitely generated matrix group over a number field.
struct GroupDescription {
  FieldPtr field;
  std::size_t n = 0;
  std::vector<LabeledMatrix> generators;

  /// Checks square shape, invertibility and unique labels.
  void validate() const;
  std::vector<Matrix> matrices() const;
  GroupDescription conjugated(const Matrix& p, const Matrix& p_inv) const;
};

}  // namespace sepcert::nfield
