#include "sepcert/separator/bs12.hpp"

#include "sepcert/error.hpp"
#include "sepcert/nfield/triangularize.hpp"
#include "sepcert/residue/closure.hpp"

namespace sepcert::separator {

nfield::GroupDescription bs12_group() {
  nfield::GroupDescription g;
  g.field = nfield::NumberField::rationals();
  g.n = 2;
  g.generators.push_back({"t", nfield::embed(nfield::Matrix::from_ints({{2, 0}, {0, 1}}), g.field)});
  g.generators.push_back({"a", nfield::embed(nfield::Matrix::from_ints({{1, 1}, {0, 1}}), g.field)});
  return g;
}

std::vector<Bs12Row> bs12_odd_order(long lo, long hi) {
  const auto g = bs12_group();
  std::vector<Bs12Row> rows;
  for (exact::Integer p = exact::next_prime(exact::Integer(std::max(lo, 3L) - 1)); p <= hi; p = exact::next_prime(p)) {
    const auto map = residue::build_residue_map(g.field, p, {});
    const auto& ring = map.target();
    const auto t = map.apply(g.generators[0].matrix);
    const auto a = map.apply(g.generators[1].matrix);
    const std::vector<residue::FiniteRing> rings{ring};
    Bs12Row row;
    row.p = exact::to_i64(p);
    row.order_a = static_cast<long>(residue::element_order(rings, {a}));
    row.order_t = static_cast<long>(residue::element_order(rings, {t}));
    const auto tinv = residue::apply_matrix({{map}}, g.generators[0].matrix.inverse())[0];
    const auto lhs = residue::multiply(rings, residue::multiply(rings, {t}, {a}), {tinv});
    row.relation = lhs == residue::multiply(rings, {a}, {a});
    row.odd = row.order_a % 2 == 1;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sepcert::separator
