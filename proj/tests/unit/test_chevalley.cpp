#include <doctest.h>

#include "oracle.hpp"
#include "sepcert/chevalley/chevalley.hpp"
#include "sepcert/error.hpp"

using namespace sepcert;
using namespace sepcert::chevalley;
using nfield::NumberField;
using units::FieldElement;

namespace {

units::UnitList rational_units(std::initializer_list<long> xs) {
  units::UnitList u{NumberField::rationals(), {}, units::kDefaultRelationBound};
  for (long x : xs) u.units.push_back(FieldElement(x).with_field(u.field));
  return u;
}

}  // namespace

TEST_SUITE("chevalley") {

TEST_CASE("<-1, 2> and r = 2") {
  const auto m = chevalley_modulus(rational_units({-1, 2}), 2, {});
  CHECK(m.q == 15);
  CHECK(m.structure.torsion_order == 2);
  CHECK(m.structure.free_generators.size() == 1);
  CHECK(oracle::smallest_chevalley({{-1, 1}, {2, 1}}, 2, 2, 1, 100) == 15);
}

TEST_CASE("<2> and r = 2") {
  const auto m = chevalley_modulus(rational_units({2}), 2, {});
  CHECK(m.q == 3);
  CHECK(oracle::smallest_chevalley({{2, 1}}, 2, 1, 1, 100) == 3);
}

TEST_CASE("agrees with brute force on small unit groups") {
  struct Case {
    std::vector<std::pair<std::int64_t, std::int64_t>> units;
    long r;
    std::int64_t w;
    int k;
  };
  const std::vector<Case> cases{
      {{{3, 1}}, 2, 1, 1},       {{{3, 1}}, 3, 1, 1},         {{{-1, 1}, {3, 1}}, 4, 2, 1},
      {{{2, 1}, {3, 1}}, 2, 1, 2}, {{{-1, 1}, {5, 1}}, 2, 2, 1}, {{{2, 3}}, 4, 1, 1},
      {{{-1, 1}}, 2, 2, 0},
  };
  for (const auto& c : cases) {
    units::UnitList u{NumberField::rationals(), {}, units::kDefaultRelationBound};
    for (const auto& [n, d] : c.units) u.units.push_back(FieldElement(exact::make_rational(n, d)).with_field(u.field));
    const auto m = chevalley_modulus(u, c.r, {});
    INFO("r = " << c.r << " first unit " << c.units[0].first);
    CHECK(m.q == oracle::smallest_chevalley(c.units, c.r, c.w, c.k, 5000));
  }
}

TEST_CASE("kernel_in_powers") {
  CHECK(kernel_in_powers({{2, 0}, {0, 4}}, 2, 2));
  CHECK_FALSE(kernel_in_powers({{1, 1}}, 2, 2));
  CHECK(kernel_in_powers({{1, 2}}, 2, 1));
}

TEST_CASE("search limit") {
  SearchOptions o;
  o.search_limit = 10;
  CHECK_THROWS_AS(chevalley_modulus(rational_units({-1, 2}), 2, {}, o), Error);
  try {
    chevalley_modulus(rational_units({-1, 2}), 2, {}, o);
  } catch (const Error& e) {
    CHECK(classify(e.code()) == ErrorClass::Resource);
  }
}

TEST_CASE("avoid list") {
  // 15 is ruled out, so the next working modulus is used.
  const auto m = chevalley_modulus(rational_units({-1, 2}), 2, {5});
  CHECK(m.q != 15);
  CHECK(exact::gcd(m.q, 5) == 1);
  const auto& q = m.q;
  CHECK(oracle::chevalley_works({{-1, 1}, {2, 1}}, q.get_si(), 2, 2, 1));
}

}
