#include <doctest.h>

#include "sepcert/error.hpp"
#include "sepcert/units/units.hpp"

using namespace sepcert;
using namespace sepcert::units;
using nfield::NumberField;

namespace {

UnitList rational_units(std::initializer_list<long> xs) {
  UnitList u{NumberField::rationals(), {}, kDefaultRelationBound};
  for (long x : xs) u.units.push_back(FieldElement(x).with_field(u.field));
  return u;
}

}  // namespace

TEST_SUITE("units") {

TEST_CASE("2, 4, 8: one free generator") {
  const auto b = free_basis(rational_units({2, 4, 8}));
  CHECK(b.torsion.order == 1);
  CHECK(b.indices == std::vector<std::size_t>{0});
  CHECK(b.index == 1);
  // every listed relation really is one
  const auto u = rational_units({2, 4, 8});
  for (const auto& r : b.relations) CHECK(evaluate(u, r).is_one());
}

TEST_CASE("-1 and 2") {
  const auto u = rational_units({-1, 2});
  CHECK(torsion_order(u).order == 2);
  const auto b = free_basis(u);
  CHECK(b.torsion.order == 2);
  CHECK(b.indices == std::vector<std::size_t>{1});
  CHECK(b.generators[0] == FieldElement(4).with_field(u.field));
  CHECK(b.index == 4);  // [<-1,2> : <4>] = 2 * 2
}

TEST_CASE("all torsion") {
  CHECK_THROWS_AS(free_basis(rational_units({-1})), Error);
}

TEST_CASE("discrete log") {
  const auto u = rational_units({2, 3});
  const auto e = discrete_log(u, FieldElement(exact::make_rational(8, 9)).with_field(u.field));
  CHECK(e == IntVector{3, -2});
  CHECK_THROWS_AS(discrete_log(u, FieldElement(5).with_field(u.field)), Error);
}

TEST_CASE("units of Q(sqrt 2)") {
  const auto k = NumberField::create({-2, 0, 1});
  const auto eps = FieldElement(1).with_field(k) + FieldElement::alpha(k);
  UnitList u{k, {eps, eps.pow(3), FieldElement(-1).with_field(k)}, kDefaultRelationBound};
  const auto lat = exponent_lattice(u);
  for (const auto& r : lat) CHECK(evaluate(u, r).is_one());
  CHECK(torsion_order(u).order == 2);
  const auto b = free_basis(u);
  CHECK(b.indices.size() == 1);
}

TEST_CASE("complement and power decomposition") {
  const auto u = rational_units({2, 3});
  const std::vector<FieldElement> g{FieldElement(4).with_field(u.field)};
  const auto c = complement_subgroup(u, g);
  CHECK(c.index == 2);
  const auto nu = FieldElement(6).with_field(u.field);
  const auto dec = decompose_power(nu, c.index, u, c, g);
  FieldElement rhs = dec.kappa;
  for (std::size_t j = 0; j < g.size(); ++j) rhs *= g[j].pow(dec.q[j]);
  CHECK(nu.pow(c.index) == rhs);
}

}
