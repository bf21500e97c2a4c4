#include <doctest.h>

#include "properties.hpp"
#include "sepcert/nfield/roots.hpp"
#include "sepcert/nfield/triangularize.hpp"

using namespace sepcert;
using namespace sepcert::nfield;

TEST_SUITE("nfield") {

TEST_CASE("arithmetic in Q(sqrt 2)") {
  const auto k = NumberField::create({-2, 0, 1});
  const auto a = FieldElement::alpha(k);
  CHECK(a * a == FieldElement(2).with_field(k));
  const auto u = FieldElement(1).with_field(k) + a;  // fundamental unit
  CHECK(u.norm() == Rational(-1));
  CHECK(u * u.inverse() == FieldElement(1).with_field(k));
  CHECK(u.pow(-3) * u.pow(3) == FieldElement(1).with_field(k));
  CHECK(k->discriminant() == 8);
  CHECK_THROWS(NumberField::create({-4, 0, 1}));
}

TEST_CASE("roots of unity") {
  CHECK(roots_of_unity(NumberField::rationals()).order == 2);
  CHECK(roots_of_unity(NumberField::create({1, 0, 1})).order == 4);
  CHECK(roots_of_unity(NumberField::create({-2, 0, 1})).order == 2);
  const auto k = NumberField::create({1, 0, 1});
  CHECK(is_root_of_unity(FieldElement::alpha(k)) == 4ul);
  CHECK_FALSE(is_root_of_unity(FieldElement(2).with_field(k)).has_value());
}

TEST_CASE("roots in the field") {
  const auto k = NumberField::create({1, 0, 1});
  // x^2 + 1 has roots +-i in Q(i) and none in Q.
  CHECK(roots_in_field(to_kpoly(IntPoly{1, 0, 1}, k), k).size() == 2);
  const auto q = NumberField::rationals();
  CHECK(roots_in_field(to_kpoly(IntPoly{1, 0, 1}, q), q).empty());
}

TEST_CASE("matrix basics") {
  const Matrix a = Matrix::from_ints({{2, 1}, {0, 3}});
  CHECK(a * a.inverse() == Matrix::identity(2));
  CHECK(a.determinant() == FieldElement(6));
  CHECK(a.pow(-2) * a.pow(2) == Matrix::identity(2));
  CHECK(a.is_upper_triangular());
  CHECK_FALSE(Matrix::from_ints({{1, 0}, {1, 1}}).is_upper_triangular());
  CHECK(is_unipotent(Matrix::from_ints({{1, 5}, {0, 1}})));
}

TEST_CASE("kernel and span") {
  const Rows rows{{FieldElement(1), FieldElement(2), FieldElement(3)}};
  const auto k = kernel(rows, 3);
  CHECK(k.size() == 2);
  const auto c = coordinates_in_span({{FieldElement(1), FieldElement(0)}, {FieldElement(1), FieldElement(1)}},
                                     {FieldElement(3), FieldElement(2)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == FieldElement(1));
  CHECK((*c)[1] == FieldElement(2));
}

TEST_CASE("triangularization round trip") {
  const auto r = props::triangularize_property(50, 3);
  INFO(r.first_failure);
  CHECK(r.ok());
  CHECK(r.cases == 50);
}

TEST_CASE("eigenvalues outside the field") {
  GroupDescription g;
  g.field = NumberField::rationals();
  g.n = 2;
  g.generators = {{"r", Matrix::from_ints({{0, -1}, {1, 0}})}};
  CHECK_THROWS_AS(triangularize_abelian(g), NeedsExtension);
  g.generators.push_back({"s", Matrix::from_ints({{1, 1}, {0, 1}})});
  CHECK_THROWS_AS(require_commuting(g.matrices()), Error);
}

}
