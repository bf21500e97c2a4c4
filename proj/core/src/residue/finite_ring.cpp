#include "sepcert/residue/finite_ring.hpp"

#include <numeric>
#include <sstream>

#include "sepcert/error.hpp"
#include "sepcert/exact/int_matrix.hpp"

namespace sepcert::residue {

namespace {

std::int64_t mod_i64(const Integer& v, std::int64_t q) {
  return static_cast<std::int64_t>(exact::mod(v, Integer(static_cast<long>(q))).get_si());
}

Integer det_minor(const std::vector<std::vector<std::int64_t>>& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t d = m.size();
  if (d == 1) return 1;
  exact::IntMatrix a(d - 1, d - 1);
  for (std::size_t i = 0, r = 0; i < d; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, c = 0; j < d; ++j) {
      if (j == skip_col) continue;
      a(r, c++) = static_cast<long>(m[i][j]);
    }
    ++r;
  }
  return exact::determinant(a);
}

}  // namespace

FiniteRing::FiniteRing(std::int64_t q, IntPoly g) : q_(q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  if (q >= (std::int64_t{1} << 62)) throw Error(ErrorCode::InvalidArgument, "modulus too large");
  std::vector<Integer> c;
  for (const auto& x : g.coeffs()) c.push_back(exact::mod(x, Integer(static_cast<long>(q))));
  g_ = IntPoly(std::move(c));
  if (g_.degree() < 1 || g_.leading() != 1) throw Error(ErrorCode::InvalidArgument, "defining polynomial must be monic mod q");
  d_ = static_cast<std::size_t>(g_.degree());
}

RingElem FiniteRing::one() const {
  RingElem e = zero();
  e[0] = 1 % q_;
  return e;
}

RingElem FiniteRing::from_int(const Integer& v) const {
  RingElem e = zero();
  e[0] = mod_i64(v, q_);
  return e;
}

RingElem FiniteRing::reduce(const IntPoly& p) const {
  std::vector<std::int64_t> c;
  for (const auto& x : p.coeffs()) c.push_back(mod_i64(x, q_));
  for (std::size_t i = c.size(); i-- > d_;) {
    const std::int64_t top = c[i];
    if (top == 0) continue;
    c[i] = 0;
    for (std::size_t j = 0; j < d_; ++j) {
      const std::int64_t gj = static_cast<std::int64_t>(g_[j].get_si());
      c[i - d_ + j] = (c[i - d_ + j] + q_ - mulmod(top, gj)) % q_;
    }
  }
  c.resize(d_, 0);
  return c;
}

RingElem FiniteRing::add(const RingElem& a, const RingElem& b) const {
  RingElem r(d_);
  for (std::size_t i = 0; i < d_; ++i) r[i] = (a[i] + b[i]) % q_;
  return r;
}

RingElem FiniteRing::neg(const RingElem& a) const {
  RingElem r(d_);
  for (std::size_t i = 0; i < d_; ++i) r[i] = a[i] ? q_ - a[i] : 0;
  return r;
}

RingElem FiniteRing::sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

RingElem FiniteRing::mul(const RingElem& a, const RingElem& b) const {
  if (d_ == 1) return {mulmod(a[0], b[0])};
  std::vector<std::int64_t> prod(2 * d_ - 1, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j])) % q_;
  }
  for (std::size_t i = prod.size(); i-- > d_;) {
    const std::int64_t top = prod[i];
    if (!top) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      const std::int64_t gj = static_cast<std::int64_t>(g_[j].get_si());
      prod[i - d_ + j] = (prod[i - d_ + j] + q_ - mulmod(top, gj)) % q_;
    }
  }
  prod.resize(d_);
  return prod;
}

bool FiniteRing::is_zero(const RingElem& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

std::int64_t FiniteRing::norm(const RingElem& a) const {
  exact::IntMatrix im(d_, d_);
  RingElem basis = zero();
  for (std::size_t j = 0; j < d_; ++j) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[j] = 1;
    const RingElem col = mul(a, basis);
    for (std::size_t i = 0; i < d_; ++i) im(i, j) = static_cast<long>(col[i]);
  }
  return mod_i64(exact::determinant(im), q_);
}

bool FiniteRing::is_unit(const RingElem& a) const {
  return std::gcd(norm(a), q_) == 1;
}

RingElem FiniteRing::inverse(const RingElem& a) const {
  if (!is_unit(a)) throw Error(ErrorCode::NotInvertible, "non-unit in " + to_string());
  std::vector<std::vector<std::int64_t>> m(d_, std::vector<std::int64_t>(d_));
  RingElem basis = zero();
  for (std::size_t j = 0; j < d_; ++j) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[j] = 1;
    const RingElem col = mul(a, basis);
    for (std::size_t i = 0; i < d_; ++i) m[i][j] = col[i];
  }
  // Solve M y = e_0 via the adjugate: y_i = (-1)^i minor(0, i) / det.
  Integer inv_det;
  exact::inverse_mod(Integer(static_cast<long>(norm(a))), Integer(static_cast<long>(q_)), inv_det);
  RingElem y(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    Integer cof = det_minor(m, 0, i);
    if (i % 2) cof = -cof;
    y[i] = mod_i64(cof * inv_det, q_);
  }
  return y;
}

std::vector<RingElem> FiniteRing::elements() const {
  std::vector<RingElem> out;
  RingElem e = zero();
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < d_ && ++e[i] == q_) e[i++] = 0;
    if (i == d_) break;
  }
  return out;
}

std::string FiniteRing::to_string() const {
  if (d_ == 1 && g_[0] == 0) return "Z/" + std::to_string(q_);
  return "Z[x]/(" + exact::to_string(g_) + ", " + std::to_string(q_) + ")";
}

FiniteMatrix identity(const FiniteRing& ring, std::size_t n) {
  FiniteMatrix m{n, std::vector<RingElem>(n * n, ring.zero())};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

FiniteMatrix multiply(const FiniteRing& ring, const FiniteMatrix& a, const FiniteMatrix& b) {
  const std::size_t n = a.n;
  FiniteMatrix m{n, std::vector<RingElem>(n * n, ring.zero())};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const RingElem& x = a.at(i, k);
      if (ring.is_zero(x)) continue;
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = ring.add(m.at(i, j), ring.mul(x, b.at(k, j)));
    }
  return m;
}

namespace {

RingElem laplace(const FiniteRing& ring, const FiniteMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.n) return ring.one();
  RingElem acc = ring.zero();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (ring.is_zero(m.at(row, c))) continue;
    cols.erase(cols.begin() + static_cast<long>(k));
    RingElem term = ring.mul(m.at(row, c), laplace(ring, m, cols, row + 1));
    cols.insert(cols.begin() + static_cast<long>(k), c);
    acc = k % 2 ? ring.sub(acc, term) : ring.add(acc, term);
  }
  return acc;
}

}  // namespace

RingElem determinant(const FiniteRing& ring, const FiniteMatrix& m) {
  std::vector<std::size_t> cols(m.n);
  for (std::size_t i = 0; i < m.n; ++i) cols[i] = i;
  return laplace(ring, m, cols, 0);
}

bool is_upper_triangular(const FiniteRing& ring, const FiniteMatrix& m) {
  for (std::size_t i = 1; i < m.n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!ring.is_zero(m.at(i, j))) return false;
  return true;
}

void append_encoding(std::string& out, const FiniteMatrix& m) {
  for (const auto& e : m.entries)
    for (std::int64_t c : e) {
      auto u = static_cast<std::uint64_t>(c);
      for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((u >> (8 * b)) & 0xff));
    }
}

std::string to_string(const FiniteMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.n; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.n; ++j) {
      const RingElem& e = m.at(i, j);
      os << (j ? ", " : "");
      if (e.size() == 1) {
        os << e[0];
      } else {
        os << '(';
        for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
        os << ')';
      }
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace sepcert::residue
