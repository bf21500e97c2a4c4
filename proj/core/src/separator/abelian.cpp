#include "sepcert/separator/abelian.hpp"

#include "sepcert/nfield/triangularize.hpp"
#include "sepcert/units/units.hpp"

namespace sepcert::separator {

Matrix word(const std::vector<Matrix>& gens, const IntVector& e) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "word over no generators");
  Matrix out = Matrix::identity(gens[0].size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (e[i] != 0) out = out * gens[i].pow(e[i]);
  return out;
}

std::vector<FieldElement> diagonal_column(const std::vector<Matrix>& gens, std::size_t s, const FieldPtr& field) {
  std::vector<FieldElement> out;
  for (const auto& g : gens) out.push_back(g(s, s).with_field(field));
  return out;
}

std::vector<IntVector> character_kernel(const std::vector<Matrix>& tri_gens, const FieldPtr& field, long bound) {
  const std::size_t m = tri_gens.size();
  if (m == 0) return {};
  std::vector<IntVector> lat;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m);
    e[i] = 1;
    lat.push_back(e);
  }
  for (std::size_t s = 0; s < tri_gens[0].size(); ++s) {
    const auto rel = units::exponent_lattice({field, diagonal_column(tri_gens, s, field), bound});
    lat = exact::lattice_intersection(lat, rel, m);
    if (lat.empty()) break;
  }
  for (auto& v : lat) v = exact::normalize_sign(v);
  return lat;
}

void check_unipotent_free(const GroupDescription& H, long bound) {
  if (H.generators.empty()) return;
  const auto tri = nfield::triangularize_abelian(H);
  const auto kernel = character_kernel(tri.conjugated.matrices(), H.field, bound);
  const auto gens = H.matrices();
  for (const auto& e : kernel) {
    Matrix w = word(gens, e);
    if (!w.is_identity()) throw NotUnipotentFreeError(std::move(w), e);
  }
}

std::vector<IntVector> quotient_reps(const std::vector<IntVector>& lat, std::size_t m) {
  const auto snf = exact::smith_normal_form(exact::IntMatrix::from_rows(lat, m));
  const auto vinv = exact::inverse_unimodular(snf.V);
  std::vector<IntVector> reps{IntVector(m)};
  for (std::size_t j = 0; j < snf.rank; ++j) {
    const Integer dj = abs(snf.D(j, j));
    if (dj == 1) continue;
    const IntVector dir = vinv.row(j);
    std::vector<IntVector> next;
    for (const auto& r : reps)
      for (Integer a = 0; a < dj; ++a) {
        IntVector v = r;
        for (std::size_t i = 0; i < m; ++i) v[i] += a * dir[i];
        next.push_back(std::move(v));
      }
    reps = std::move(next);
  }
  return reps;
}

namespace {

std::size_t rank_of(const std::vector<IntVector>& gens, std::size_t m) {
  return gens.empty() ? 0 : exact::lattice_basis(gens, m).size();
}

}  // namespace

SplitS split_s_plus(const std::vector<Matrix>& tri_gens, const FieldPtr& field, long bound) {
  SplitS out;
  const std::size_t m = tri_gens.size();
  if (m == 0) return out;
  const auto lat = character_kernel(tri_gens, field, bound);
  for (const auto& e : lat) {
    Matrix w = word(tri_gens, e);
    if (!w.is_identity()) out.s_plus.push_back(std::move(w));
  }
  // Complement of the saturation: standard vectors if they do it, SNF otherwise.
  const auto sat = lat.empty() ? std::vector<IntVector>{} : exact::saturate(lat, m);
  std::vector<IntVector> comp;
  auto span = sat;
  for (std::size_t j = 0; j < m && rank_of(span, m) < m; ++j) {
    IntVector e(m);
    e[j] = 1;
    auto trial = span;
    trial.push_back(e);
    if (rank_of(trial, m) > rank_of(span, m)) {
      span = std::move(trial);
      comp.push_back(std::move(e));
    }
  }
  if (exact::lattice_index(span, m) != Integer(1)) {
    comp.clear();
    const auto snf = exact::smith_normal_form(exact::IntMatrix::from_rows(sat, m));
    const auto vinv = exact::inverse_unimodular(snf.V);
    for (std::size_t j = snf.rank; j < m; ++j) comp.push_back(vinv.row(j));
  }
  for (const auto& c : comp) {
    out.s1.push_back(word(tri_gens, c));
    out.s1_exponents.push_back(c);
  }
  auto s1_lattice = lat;
  s1_lattice.insert(s1_lattice.end(), comp.begin(), comp.end());
  for (auto& r : quotient_reps(s1_lattice, m)) {
    out.coset_reps.push_back(word(tri_gens, r));
    out.rep_exponents.push_back(std::move(r));
  }
  return out;
}

namespace {

Matrix unipotent_log(const Matrix& u) {
  const std::size_t n = u.size();
  const Matrix nil = u - Matrix::identity(n);
  Matrix power = nil, out(n);
  for (std::size_t k = 1; k < n; ++k) {
    const exact::Rational c = exact::make_rational(k % 2 ? 1 : -1, static_cast<long>(k));
    out = out + power.scaled(FieldElement(c));
    power = power * nil;
  }
  return out;
}

}  // namespace

std::optional<IntVector> membership(const std::vector<Matrix>& tri_gens, const Matrix& x, const FieldPtr& field,
                                    long bound) {
  const std::size_t m = tri_gens.size();
  const std::size_t n = x.size();
  if (!x.is_upper_triangular()) return std::nullopt;
  if (m == 0) {
    if (x.is_identity()) return IntVector{};
    return std::nullopt;
  }
  // Intersect the cosets {e : prod lambda_is^{e_i} = x_ss} position by position.
  IntVector point(m);
  std::vector<IntVector> lat;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m);
    e[i] = 1;
    lat.push_back(e);
  }
  for (std::size_t s = 0; s < n; ++s) {
    const units::UnitList u{field, diagonal_column(tri_gens, s, field), bound};
    IntVector es;
    try {
      es = units::discrete_log(u, x(s, s).with_field(field));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotInLattice) return std::nullopt;
      throw;
    }
    const auto ls = units::exponent_lattice(u);
    // point + a = es + b with a in lat, b in ls.
    std::vector<IntVector> both = lat;
    both.insert(both.end(), ls.begin(), ls.end());
    IntVector diff(m);
    for (std::size_t i = 0; i < m; ++i) diff[i] = es[i] - point[i];
    const auto coef = exact::solve_in_lattice(both, diff);
    if (!coef) return std::nullopt;
    for (std::size_t j = 0; j < lat.size(); ++j)
      for (std::size_t i = 0; i < m; ++i) point[i] += (*coef)[j] * lat[j][i];
    lat = exact::lattice_intersection(lat, ls, m);
  }
  const Matrix rest = x * word(tri_gens, point).inverse();
  if (rest.is_identity()) return point;
  std::vector<Matrix> plus;
  std::vector<IntVector> plus_exp;
  for (const auto& l : lat) {
    Matrix w = word(tri_gens, l);
    if (!w.is_identity()) {
      plus.push_back(std::move(w));
      plus_exp.push_back(l);
    }
  }
  if (plus.empty()) return std::nullopt;
  std::vector<nfield::Vector> logs;
  for (const auto& w : plus) logs.push_back(unipotent_log(w).entries());
  nfield::Rows rows(n * n, nfield::Vector(logs.size()));
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t j = 0; j < logs.size(); ++j) rows[r][j] = logs[j][r];
  if (!nfield::kernel(rows, logs.size()).empty())
    throw Error(ErrorCode::NotApplicable, "unipotent part has dependent logarithms");
  const auto coords = nfield::coordinates_in_span(logs, unipotent_log(rest).entries());
  if (!coords) return std::nullopt;
  IntVector a(logs.size());
  for (std::size_t j = 0; j < logs.size(); ++j) {
    const auto& c = (*coords)[j];
    if (!c.is_rational() || c.rational_value().get_den() != 1) return std::nullopt;
    a[j] = c.rational_value().get_num();
  }
  IntVector e = point;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) e[i] += a[j] * plus_exp[j][i];
  if (word(tri_gens, e) == x) return e;
  return std::nullopt;
}

BorelSeparation separate_from_borel(const Matrix& h, const FieldPtr& field, const std::vector<Integer>& avoid) {
  const auto pos = h.first_lower_entry();
  if (!pos) throw Error(ErrorCode::NotApplicable, "h is upper triangular");
  const FieldElement entry = h(pos->first, pos->second).with_field(field);
  const Integer num = abs(entry.norm().get_num());
  auto bad = [&](const Integer& p) {
    if (exact::gcd(p, field->discriminant()) != 1) return true;
    if (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) return true;
    for (const auto& a : avoid)
      if (exact::gcd(p, a) != 1) return true;
    return false;
  };
  Integer p = 2;
  while (bad(p)) p = exact::next_prime(p);
  BorelSeparation out;
  out.p = p;
  out.row = pos->first;
  out.col = pos->second;
  out.hom.components.push_back(residue::build_residue_map(field, p, avoid));
  return out;
}

}  // namespace sepcert::separator
