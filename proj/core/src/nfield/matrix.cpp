#include "sepcert/nfield/matrix.hpp"

#include <set>
#include <sstream>

#include "sepcert/error.hpp"

namespace sepcert::nfield {

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n, FieldElement(0)) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
}

Matrix::Matrix(std::size_t n, std::vector<FieldElement> entries) : n_(n), a_(std::move(entries)) {
  if (n == 0 || a_.size() != n * n) throw Error(ErrorCode::InvalidArgument, "matrix entries do not form an n x n grid");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<FieldElement>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorCode::InvalidArgument, "matrix literal not square");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = FieldElement(Rational(v));
    ++r;
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  Matrix m(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != cols.size()) throw Error(ErrorCode::InvalidArgument, "columns do not form a square matrix");
    for (std::size_t r = 0; r < cols.size(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

FieldPtr Matrix::field() const {
  for (const auto& x : a_)
    if (x.field()) return x.field();
  return nullptr;
}

Matrix Matrix::with_field(const FieldPtr& f) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = x.with_field(f);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  for (std::size_t r = 0; r < n_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::InvalidArgument, "matrix dimension mismatch");
  Matrix m(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (v.size() != a.n_) throw Error(ErrorCode::InvalidArgument, "matrix-vector dimension mismatch");
  Vector r(a.n_, FieldElement(0));
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix m(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix m(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

Matrix Matrix::scaled(const FieldElement& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = s * x;
  return m;
}

FieldElement Matrix::determinant() const {
  std::vector<FieldElement> m = a_;
  FieldElement det = 1;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t p = k;
    while (p < n_ && m[p * n_ + k].is_zero()) ++p;
    if (p == n_) return FieldElement(0);
    if (p != k) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(m[p * n_ + c], m[k * n_ + c]);
      det = -det;
    }
    det *= m[k * n_ + k];
    const FieldElement inv = m[k * n_ + k].inverse();
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (m[i * n_ + k].is_zero()) continue;
      const FieldElement f = m[i * n_ + k] * inv;
      for (std::size_t j = k; j < n_; ++j) m[i * n_ + j] -= f * m[k * n_ + j];
    }
  }
  return det;
}

FieldElement Matrix::trace() const {
  FieldElement t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::inverse() const {
  std::vector<FieldElement> m = a_;
  Matrix inv = identity(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t p = k;
    while (p < n_ && m[p * n_ + k].is_zero()) ++p;
    if (p == n_) throw Error(ErrorCode::NotInvertible, "singular matrix");
    if (p != k)
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(m[p * n_ + c], m[k * n_ + c]);
        std::swap(inv(p, c), inv(k, c));
      }
    const FieldElement piv = m[k * n_ + k].inverse();
    for (std::size_t c = 0; c < n_; ++c) {
      m[k * n_ + c] *= piv;
      inv(k, c) *= piv;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k || m[i * n_ + k].is_zero()) continue;
      const FieldElement f = m[i * n_ + k];
      for (std::size_t c = 0; c < n_; ++c) {
        m[i * n_ + c] -= f * m[k * n_ + c];
        inv(i, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

Matrix Matrix::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(Integer(-e));
  Matrix result = identity(n_);
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * *this;
  }
  return result;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != FieldElement(i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_upper_triangular() const { return !first_lower_entry().has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_lower_entry() const {
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return std::make_pair(i, j);
  return std::nullopt;
}

std::vector<FieldElement> Matrix::diagonal_entries() const {
  std::vector<FieldElement> d;
  for (std::size_t i = 0; i < n_; ++i) d.push_back((*this)(i, i));
  return d;
}

Integer Matrix::denominator() const {
  Integer l = 1;
  for (const auto& x : a_) l = exact::lcm(l, x.denominator());
  return l;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Rows& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const FieldElement inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElement f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<Vector> kernel(const Rows& rows, std::size_t cols) {
  Rows m = rows;
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged row system");
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, FieldElement(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> coordinates_in_span(const std::vector<Vector>& basis, const Vector& target) {
  const std::size_t k = basis.size();
  const std::size_t n = target.size();
  // Augmented system: rows are coordinates, columns are basis vectors + target.
  Rows m(n, Vector(k + 1, FieldElement(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = target[i];
  }
  const auto pivots = rref(m, k + 1);
  Vector x(k, FieldElement(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return std::nullopt;
    x[pivots[r]] = m[r][k];
  }
  return x;
}

KPoly char_poly(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<FieldElement> c(n + 1, FieldElement(0));
  c[n] = 1;
  Matrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + Matrix::identity(n).scaled(c[n - k + 1]);
    c[n - k] = -((a * mk).trace() * FieldElement(Rational(1, static_cast<unsigned long>(k))));
  }
  const FieldPtr f = a.field();
  for (auto& x : c) x = x.with_field(f);
  return KPoly(std::move(c));
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

bool is_unipotent(const Matrix& m) {
  const Matrix n = m - Matrix::identity(m.size());
  Matrix p = n;
  for (std::size_t i = 1; i < m.size(); ++i) p = p * n;
  for (const auto& x : p.entries())
    if (!x.is_zero()) return false;
  return true;
}

void GroupDescription::validate() const {
  std::set<std::string> labels;
  for (const auto& g : generators) {
    if (!labels.insert(g.label).second) throw Error(ErrorCode::InvalidArgument, "duplicate generator label '" + g.label + "'");
    if (g.matrix.size() != n) throw Error(ErrorCode::InvalidArgument, "generator '" + g.label + "' has wrong dimension");
    if (!g.matrix.is_invertible()) throw Error(ErrorCode::NotInvertible, "generator '" + g.label + "' is singular");
  }
}

std::vector<Matrix> GroupDescription::matrices() const {
  std::vector<Matrix> out;
  for (const auto& g : generators) out.push_back(g.matrix);
  return out;
}

GroupDescription GroupDescription::conjugated(const Matrix& p, const Matrix& p_inv) const {
  GroupDescription out{field, n, {}};
  for (const auto& g : generators) out.generators.push_back({g.label, p_inv * g.matrix * p});
  return out;
}

}  // namespace sepcert::nfield
