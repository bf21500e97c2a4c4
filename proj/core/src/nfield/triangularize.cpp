#include "sepcert/nfield/triangularize.hpp"

#include "sepcert/exact/factor.hpp"
#include "sepcert/nfield/roots.hpp"

namespace sepcert::nfield {

void require_commuting(const std::vector<Matrix>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j]))
        throw Error(ErrorCode::NotCommuting, "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
}

std::variant<Vector, Obstruction> common_eigenvector(const std::vector<Matrix>& gens, const FieldPtr& field) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no matrices given");
  require_commuting(gens);
  const std::size_t n = gens.front().size();
  std::vector<Vector> W;  // basis of the current common eigenspace
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, FieldElement(0).with_field(field));
    e[i] = FieldElement(1).with_field(field);
    W.push_back(std::move(e));
  }
  for (const auto& m : gens) {
    // Matrix of m restricted to span(W); span(W) is m-invariant.
    const std::size_t k = W.size();
    Matrix r(k);
    for (std::size_t j = 0; j < k; ++j) {
      const auto c = coordinates_in_span(W, m.with_field(field) * W[j]);
      if (!c) throw Error(ErrorCode::NotCommuting, "eigenspace not invariant");
      for (std::size_t i = 0; i < k; ++i) r(i, j) = (*c)[i];
    }
    const KPoly chi = char_poly(r.with_field(field));
    const auto roots = roots_in_field(chi, field);
    if (roots.empty()) return Obstruction{obstruction_factor(chi, field)};
    Rows rows;
    for (std::size_t i = 0; i < k; ++i) {
      Vector row;
      for (std::size_t j = 0; j < k; ++j) row.push_back(r(i, j) - (i == j ? roots.front() : FieldElement(0)));
      rows.push_back(std::move(row));
    }
    std::vector<Vector> next;
    for (const auto& c : kernel(rows, k)) {
      Vector v(n, FieldElement(0).with_field(field));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < n; ++t) v[t] += c[j] * W[j][t];
      next.push_back(std::move(v));
    }
    W = std::move(next);
  }
  return W.front();
}

namespace {

Matrix block_diag_one(const Matrix& p2) {
  const std::size_t n = p2.size() + 1;
  Matrix p = Matrix::identity(n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) p(i, j) = p2(i - 1, j - 1);
  return p;
}

Matrix triangularize_rec(const std::vector<Matrix>& gens, const FieldPtr& field) {
  const std::size_t n = gens.front().size();
  bool triangular = true;
  for (const auto& g : gens) triangular = triangular && g.is_upper_triangular();
  if (n == 1 || triangular) return Matrix::identity(n).with_field(field);

  auto ev = common_eigenvector(gens, field);
  if (auto* obs = std::get_if<Obstruction>(&ev)) throw NeedsExtension(obs->factor);
  std::vector<Vector> cols{std::get<Vector>(ev)};
  for (std::size_t j = 0; j < n && cols.size() < n; ++j) {
    Vector e(n, FieldElement(0).with_field(field));
    e[j] = FieldElement(1).with_field(field);
    if (!coordinates_in_span(cols, e)) cols.push_back(std::move(e));
  }
  const Matrix p1 = Matrix::from_columns(cols).with_field(field);
  const Matrix p1_inv = p1.inverse();
  std::vector<Matrix> lower;
  for (const auto& g : gens) {
    const Matrix c = p1_inv * g * p1;
    Matrix b(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) b(i - 1, j - 1) = c(i, j);
    lower.push_back(std::move(b));
  }
  return p1 * block_diag_one(triangularize_rec(lower, field));
}

}  // namespace

Matrix triangularizing_matrix(const std::vector<Matrix>& gens, const FieldPtr& field) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no matrices given");
  require_commuting(gens);
  std::vector<Matrix> lifted;
  for (const auto& g : gens) lifted.push_back(g.with_field(field));
  return triangularize_rec(lifted, field);
}

Triangularization triangularize_abelian(const GroupDescription& group) {
  group.validate();
  if (group.generators.empty()) return {Matrix::identity(group.n).with_field(group.field), group};
  const Matrix p = triangularizing_matrix(group.matrices(), group.field);
  return {p, group.conjugated(p, p.inverse())};
}

FieldPtr extend_by_rational_root(const IntPoly& f, const FieldPtr& base) {
  if (base && !base->is_rationals()) throw Error(ErrorCode::UnsupportedTower, "extensions are only supported over Q");
  if (f.degree() <= 1) throw Error(ErrorCode::Reducible, exact::to_string(f) + " has a rational root; the base field already contains it");
  return NumberField::create(f);
}

Matrix embed(const Matrix& m, const FieldPtr& field) {
  for (const auto& x : m.entries())
    if (!x.is_rational()) throw Error(ErrorCode::UnsupportedTower, "only rational matrices can be embedded");
  Matrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = FieldElement(m(i, j).rational_value()).with_field(field);
  return out;
}

GroupDescription embed(const GroupDescription& g, const FieldPtr& field) {
  GroupDescription out{field, g.n, {}};
  for (const auto& x : g.generators) out.generators.push_back({x.label, embed(x.matrix, field)});
  return out;
}

}  // namespace sepcert::nfield
