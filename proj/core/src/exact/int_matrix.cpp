#include "sepcert/exact/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sepcert/error.hpp"

namespace sepcert::exact {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidArgument, "empty integer matrix");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged integer matrix");
    std::size_t c = 0;
    for (long x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  IntVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t rows = A.rows(), cols = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(rows);
  IntMatrix V = IntMatrix::identity(cols);
  const std::size_t lim = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < lim; ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D(i, j) != 0 && (pr == rows || abs(D(i, j)) < abs(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      swap_rows(D, t, pr);
      swap_rows(U, t, pr);
      swap_cols(D, t, pc);
      swap_cols(V, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        add_row(D, i, t, -q);
        add_row(U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        add_col(D, j, t, -q);
        add_col(V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            add_row(D, t, i, Integer(1));
            add_row(U, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t >= rows || t >= cols || D(t, t) == 0) break;
    if (D(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) D(t, c) = -D(t, c);
      for (std::size_t c = 0; c < rows; ++c) U(t, c) = -U(t, c);
    }
  }
  std::size_t rank = 0;
  while (rank < lim && D(rank, rank) != 0) ++rank;
  return {std::move(D), std::move(U), std::move(V), rank};
}

std::vector<IntVector> hermite_rows(const std::vector<IntVector>& generators, std::size_t dim) {
  std::vector<IntVector> m;
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorCode::InvalidArgument, "lattice generator of wrong length");
    if (!is_zero(g)) m.push_back(g);
  }
  std::size_t prow = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < dim && prow < m.size(); ++c) {
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t r = prow; r < m.size(); ++r)
        if (m[r][c] != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
      if (best == m.size()) break;
      std::swap(m[prow], m[best]);
      bool done = true;
      for (std::size_t r = prow + 1; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[prow][c].get_mpz_t());
        for (std::size_t k = c; k < dim; ++k) m[r][k] -= q * m[prow][k];
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[prow][c] == 0) continue;
    if (m[prow][c] < 0)
      for (auto& x : m[prow]) x = -x;
    for (std::size_t r = 0; r < prow; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[prow][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = c; k < dim; ++k) m[r][k] -= q * m[prow][k];
    }
    pivot_cols.push_back(c);
    ++prow;
  }
  m.resize(prow);
  return m;
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t dim) {
  return hermite_rows(generators, dim);
}

std::vector<IntVector> lattice_kernel(const IntMatrix& A) {
  const SmithForm s = smith_normal_form(A);
  std::vector<IntVector> basis;
  for (std::size_t j = s.rank; j < A.cols(); ++j) basis.push_back(s.V.col(j));
  return hermite_rows(basis, A.cols());
}

std::vector<IntVector> saturate(const std::vector<IntVector>& generators, std::size_t dim) {
  auto basis = hermite_rows(generators, dim);
  if (basis.empty()) return basis;
  // Orthogonal complement W of L, then the kernel of W is the saturation.
  const auto w = lattice_kernel(IntMatrix::from_rows(basis, dim));
  if (w.empty()) {
    std::vector<IntVector> full;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVector e(dim);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    return full;
  }
  return lattice_kernel(IntMatrix::from_rows(w, dim));
}

std::optional<Integer> lattice_index(const std::vector<IntVector>& generators, std::size_t dim) {
  const auto h = hermite_rows(generators, dim);
  if (h.size() < dim) return std::nullopt;
  Integer idx = 1;
  for (std::size_t i = 0; i < dim; ++i) idx *= h[i][i];
  return abs(idx);
}

std::optional<IntVector> solve_in_lattice(const std::vector<IntVector>& basis, const IntVector& target) {
  if (basis.empty()) {
    if (is_zero(target)) return IntVector{};
    return std::nullopt;
  }
  const std::size_t dim = target.size();
  const std::size_t k = basis.size();
  IntMatrix bt(dim, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != dim) throw Error(ErrorCode::InvalidArgument, "lattice basis of wrong length");
    for (std::size_t i = 0; i < dim; ++i) bt(i, j) = basis[j][i];
  }
  const SmithForm s = smith_normal_form(bt);
  const IntVector ut = s.U * target;
  IntVector y(k);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(ut[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      y[i] = ut[i] / s.D(i, i);
    } else if (ut[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

std::vector<IntVector> lattice_intersection(const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                                            std::size_t dim) {
  const auto ha = hermite_rows(a, dim);
  const auto hb = hermite_rows(b, dim);
  if (ha.empty() || hb.empty()) return {};
  IntMatrix m(dim, ha.size() + hb.size());
  for (std::size_t j = 0; j < ha.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = ha[j][i];
  for (std::size_t j = 0; j < hb.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, ha.size() + j) = -hb[j][i];
  std::vector<IntVector> out;
  for (const auto& k : lattice_kernel(m)) {
    IntVector v(dim);
    for (std::size_t j = 0; j < ha.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * ha[j][i];
    out.push_back(std::move(v));
  }
  return hermite_rows(out, dim);
}

IntVector normalize_sign(IntVector v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] == 0) continue;
    if (v[i] < 0)
      for (auto& x : v) x = -x;
    break;
  }
  return v;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw Error(ErrorCode::NotInvertible, "singular integer matrix");
    std::swap(m[p], m[k]);
    const Rational piv = m[k][k];
    for (auto& x : m[k]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const Rational f = m[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m[i][n + j];
      if (x.get_den() != 1) throw Error(ErrorCode::NotInvertible, "matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

}  // namespace sepcert::exact
