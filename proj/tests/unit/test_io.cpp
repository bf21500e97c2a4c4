#include <doctest.h>

#include <string>

#include "sepcert/io/json_io.hpp"
#include "sepcert/separator/separate.hpp"

using namespace sepcert;

namespace {

std::string corpus_path(const char* name) { return std::string(SEPCERT_CORPUS_DIR) + "/" + name; }

ErrorCode code_of(const std::string& text) {
  try {
    io::parse_problem(io::parse_json_text(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("elements") {
  const auto k = nfield::NumberField::create({-2, 0, 1});
  const auto x = io::parse_element(io::parse_json_text(R"(["1/2", -3])"), k);
  CHECK(x == nfield::FieldElement(k, {exact::make_rational(1, 2), exact::Rational(-3)}));
  CHECK(io::parse_element(io::element_to_json(x, k), k) == x);
  const auto q = nfield::NumberField::rationals();
  CHECK(io::element_to_json(nfield::FieldElement(exact::make_rational(-2, 3)), q) == "-2/3");
  CHECK(io::parse_element_list("1/2, -1, 3", q).size() == 3);
  CHECK(io::parse_poly_text("1,0,1") == exact::IntPoly{1, 0, 1});
}

TEST_CASE("problem round trip") {
  for (const char* name : {"bs12_t_vs_a.json", "diag_4_vs_2.json", "gauss_units.json", "sqrt2_diag.json"}) {
    INFO(name);
    const auto p = io::load_problem(corpus_path(name));
    const auto again = io::parse_problem(io::problem_to_json(p));
    CHECK(again.h == p.h);
    REQUIRE(again.gamma.generators.size() == p.gamma.generators.size());
    for (std::size_t i = 0; i < p.gamma.generators.size(); ++i) {
      CHECK(again.gamma.generators[i].label == p.gamma.generators[i].label);
      CHECK(again.gamma.generators[i].matrix == p.gamma.generators[i].matrix);
    }
    CHECK(again.options.fast_path == p.options.fast_path);
  }
}

TEST_CASE("certificate round trip") {
  for (const char* name : {"gauss_units.json", "sqrt2_diag.json", "bs12_t_vs_a.json"}) {
    INFO(name);
    auto p = io::load_problem(corpus_path(name));
    p.options.fast_path = false;
    const auto r = separator::separate_abelian(p.gamma, p.H, p.h, p.options);
    const auto j = io::certificate_to_json(r.certificate, p.gamma.field, p.gamma.n);
    const auto back = io::parse_certificate(io::parse_json_text(io::dump(j)), p.gamma.field);
    CHECK(separator::verify_certificate(back, p.gamma, p.H, p.h).ok);
    CHECK(io::dump(io::certificate_to_json(back, p.gamma.field, p.gamma.n)) == io::dump(j));
  }
}

TEST_CASE("parse errors") {
  CHECK(code_of("{") == ErrorCode::Parse);
  CHECK(code_of(R"({"n": 2})") == ErrorCode::Parse);
  CHECK(code_of(R"({"n": 2, "gamma": [[["1","0"],["0","1"]]], "H": [], "h": [["1","x"],["0","1"]]})") == ErrorCode::Parse);
  CHECK(code_of(R"({"n": 2, "gamma": [], "H": [], "h": [["1","0"]]})") == ErrorCode::Parse);
  CHECK(classify(ErrorCode::Parse) == ErrorClass::Parse);
}

}
