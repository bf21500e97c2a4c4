#include <doctest.h>

#include "oracle.hpp"
#include "properties.hpp"
#include "sepcert/error.hpp"
#include "sepcert/residue/closure.hpp"

using namespace sepcert;
using namespace sepcert::residue;
using nfield::NumberField;

TEST_SUITE("residue") {

TEST_CASE("homomorphism law, 100 pairs per ring") {
  std::uint64_t seed = 100;
  for (const auto& rc : props::residue_rings()) {
    const auto r = props::residue_property(rc, 100, seed++);
    INFO(rc.field << " mod " << rc.q << ": " << r.first_failure);
    CHECK(r.ok());
    CHECK(r.cases == 100);
  }
}

TEST_CASE("finite ring arithmetic") {
  const FiniteRing r(5, IntPoly{1, 0, 1});
  const RingElem x{0, 1};
  CHECK(r.mul(x, x) == r.from_int(-1));
  CHECK(r.is_unit(x));
  CHECK(r.mul(x, r.inverse(x)) == r.one());
  // 2 + x is a zero divisor mod (x^2 + 1, 5): (2 + x)(2 - x) = 5.
  CHECK_FALSE(r.is_unit(RingElem{2, 1}));
}

TEST_CASE("denominators must be invertible") {
  const auto k = NumberField::rationals();
  const auto m = build_residue_map(k, 7, {});
  CHECK(m.defined_on(nfield::FieldElement(exact::make_rational(1, 3))));
  CHECK_FALSE(m.defined_on(nfield::FieldElement(exact::make_rational(1, 7))));
  CHECK_THROWS_AS(m.apply(nfield::FieldElement(exact::make_rational(1, 7))), Error);
  CHECK_THROWS_AS(build_residue_map(k, 6, {3}), Error);
  // the discriminant guard
  CHECK_THROWS_AS(build_residue_map(NumberField::create({-2, 0, 1}), 2, {}), Error);
}

TEST_CASE("closure matches brute force") {
  // <diag(2,1), [[1,1],[0,1]]> mod 7 is the affine group of order 3 * 7.
  const auto k = NumberField::rationals();
  HomDescription hom;
  hom.components.push_back(build_residue_map(k, 7, {}));
  const auto t = nfield::Matrix::from_ints({{2, 0}, {0, 1}});
  const auto a = nfield::Matrix::from_ints({{1, 1}, {0, 1}});
  const auto g = group_closure(rings_of(hom), 2, {apply_matrix(hom, t), apply_matrix(hom, a)});
  CHECK(g.order() == 21);
  CHECK(element_order(rings_of(hom), apply_matrix(hom, a)) == 7);

  const oracle::Ring r{7, {0, 1}};
  std::set<oracle::Tuple> seen;
  REQUIRE(oracle::closure({r}, 2, {{oracle::reduce(r, t)}, {oracle::reduce(r, a)}}, seen));
  CHECK(seen.size() == g.order());
  CHECK_THROWS_AS(group_closure(rings_of(hom), 2, {apply_matrix(hom, t), apply_matrix(hom, a)}, 10), Error);
}

TEST_CASE("products of maps") {
  const auto k = NumberField::create({1, 0, 1});
  HomDescription a, b;
  a.components.push_back(build_residue_map(k, 3, {}));
  b.components.push_back(build_residue_map(k, 5, {}));
  const auto p = product_hom({a, b});
  CHECK(p.components.size() == 2);
  CHECK(divides_mod(IntPoly{1, 0, 1}, IntPoly{1, 0, 1}, 3));
  CHECK(divides_mod(IntPoly{2, 1}, IntPoly{1, 0, 1}, 5));   // x + 2 | x^2 + 1 mod 5
  CHECK_FALSE(divides_mod(IntPoly{1, 1}, IntPoly{1, 0, 1}, 5));
}

}
