#include <doctest.h>

#include <string>

#include "confirm.hpp"
#include "sepcert/io/json_io.hpp"
#include "sepcert/separator/bs12.hpp"
#include "sepcert/separator/separate.hpp"

using namespace sepcert;
using namespace sepcert::separator;
using nfield::Matrix;

namespace {

io::Problem corpus(const std::string& name) { return io::load_problem(std::string(SEPCERT_CORPUS_DIR) + "/" + name); }

GroupDescription group(std::initializer_list<Matrix> gens) {
  GroupDescription g;
  g.field = nfield::NumberField::rationals();
  g.n = gens.begin()->size();
  int i = 0;
  for (const auto& m : gens) g.generators.push_back({"g" + std::to_string(i++), m});
  return g;
}

Matrix diag2(long a, long b) { return Matrix::from_ints({{a, 0}, {0, b}}); }

}  // namespace

TEST_SUITE("separator") {

TEST_CASE("corpus problems, both paths") {
  for (const char* name : {"bs12_t_vs_a.json", "diag_4_vs_2.json", "gauss_units.json", "sqrt2_diag.json"}) {
    for (bool fast : {true, false}) {
      auto p = corpus(name);
      p.options.fast_path = fast;
      INFO(name << " fast=" << fast);
      const auto r = separate_abelian(p.gamma, p.H, p.h, p.options);
      CHECK(verify_certificate(r.certificate, p.gamma, p.H, p.h).ok);
      const auto c = confirm::certificate(r.certificate, p.H, p.h);
      INFO(c.why);
      CHECK(c.ok);
      if (fast) CHECK(r.certificate.method == "fast");
      else CHECK(r.certificate.method != "fast");
    }
  }
}

TEST_CASE("diag(2,1) against <diag(4,1)> via the induction") {
  auto p = corpus("diag_4_vs_2.json");
  p.options.fast_path = false;
  const auto r = separate_abelian(p.gamma, p.H, p.h, p.options);
  REQUIRE_FALSE(r.trace.nodes.empty());
  CHECK(r.trace.nodes[0].case_id == 1);
  CHECK(r.trace.nodes[0].d == 4);
}

TEST_CASE("h inside H") {
  const auto H = group({diag2(4, 1)});
  const auto gamma = group({diag2(2, 1)});
  CHECK_THROWS_WITH_AS(separate_abelian(gamma, H, diag2(16, 1)), doctest::Contains("InSubgroup"), Error);
  CHECK_THROWS_AS(separate_abelian(gamma, H, diag2(1, 1)), Error);
  CHECK(in_abelian_subgroup(H, diag2(64, 1)));
  CHECK_FALSE(in_abelian_subgroup(H, diag2(8, 1)));
}

TEST_CASE("unipotent elements are reported with a witness") {
  // [[-1,1],[0,-1]]^2 = [[1,-2],[0,1]]
  const Matrix g = Matrix::from_ints({{-1, 1}, {0, -1}});
  const auto H = group({g});
  try {
    separate_abelian(H, H, diag2(2, 1));
    FAIL("expected NotUnipotentFree");
  } catch (const NotUnipotentFreeError& e) {
    const Matrix w = e.witness();
    CHECK_FALSE(w.is_identity());
    CHECK(nfield::is_unipotent(w));
  }
}

TEST_CASE("non-commuting H") {
  const auto H = group({diag2(2, 1), Matrix::from_ints({{1, 1}, {0, 1}})});
  CHECK_THROWS_AS(separate_abelian(H, H, diag2(3, 1)), Error);
}

TEST_CASE("verifier rejects tampering") {
  auto p = corpus("diag_4_vs_2.json");
  const auto r = separate_abelian(p.gamma, p.H, p.h, p.options);
  REQUIRE(verify_certificate(r.certificate, p.gamma, p.H, p.h).ok);

  auto wrong_h = verify_certificate(r.certificate, p.gamma, p.H, diag2(16, 1));
  CHECK_FALSE(wrong_h.ok);
  CHECK(wrong_h.reason.rfind("membership", 0) == 0);

  auto bad = r.certificate;
  bad.closure_order += 1;
  CHECK_FALSE(verify_certificate(bad, p.gamma, p.H, p.h).ok);

  bad = r.certificate;
  bad.H_images[0].image = bad.h_image;
  const auto v = verify_certificate(bad, p.gamma, p.H, p.h);
  CHECK_FALSE(v.ok);
  CHECK(v.reason.rfind("image mismatch", 0) == 0);

  bad = r.certificate;
  bad.gamma_images[0].label = "renamed";
  CHECK_FALSE(verify_certificate(bad, p.gamma, p.H, p.h).ok);
}

TEST_CASE("BS(1,2) reduced mod odd primes") {
  const auto rows = bs12_odd_order(3, 97);
  CHECK(rows.size() == 24);
  for (const auto& row : rows) {
    CHECK(row.odd);
    CHECK(row.relation);
    CHECK(row.order_a == row.p);  // a is unipotent mod p
  }
}

TEST_CASE("finite index lift") {
  const auto gamma = group({diag2(2, 1), diag2(3, 1)});
  const auto H = group({diag2(2, 1)});
  const auto Hp = group({diag2(4, 1)});
  const std::vector<Matrix> reps{Matrix::identity(2), diag2(2, 1)};
  const Matrix h = diag2(6, 1);
  std::vector<SeparationCertificate> certs;
  for (const auto& r : reps) certs.push_back(separate_abelian(gamma, Hp, r.inverse() * h).certificate);
  const auto lifted = finite_index_lift(gamma, H, Hp, reps, h, certs);
  CHECK(lifted.method == "lift");
  CHECK(verify_certificate(lifted, gamma, H, h).ok);
  CHECK_THROWS_AS(finite_index_lift(gamma, H, Hp, reps, diag2(8, 1), certs), Error);
}

}
