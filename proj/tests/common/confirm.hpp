#pragma once

// Re-checks a certificate with the oracle arithmetic: every component ring is
// rebuilt from (q, g), g | f mod q is checked by hand, and the image of H is
// enumerated by plain BFS.

#include <string>

#include "oracle.hpp"
#include "sepcert/separator/certificate.hpp"

namespace confirm {

struct Report {
  bool ok = false;
  std::size_t order = 0;
  std::string why;
};

inline Report certificate(const sepcert::separator::SeparationCertificate& cert,
                          const sepcert::nfield::GroupDescription& H, const sepcert::nfield::Matrix& h,
                          std::size_t cap = 2'000'000) {
  Report rep;
  const auto& field = H.field;
  std::vector<std::int64_t> f;
  std::vector<oracle::Ring> rings;
  for (const auto& c : cert.hom.components) {
    const std::int64_t q = c.target().modulus();
    oracle::Ring r{q, {}};
    for (const auto& x : c.target().poly().coeffs()) r.g.push_back(static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), q)));
    std::vector<std::int64_t> fq;
    for (const auto& x : field->minimal_poly().coeffs()) fq.push_back(static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), q)));
    if (!oracle::divides(r.g, fq, q)) {
      rep.why = "component ring is not a quotient of the field";
      return rep;
    }
    rings.push_back(std::move(r));
  }
  if (rings.empty()) {
    rep.why = "no components";
    return rep;
  }
  auto image = [&](const sepcert::nfield::Matrix& m) {
    oracle::Tuple t;
    for (const auto& r : rings) t.push_back(oracle::reduce(r, m));
    return t;
  };
  std::vector<oracle::Tuple> gens;
  for (const auto& g : H.generators) gens.push_back(image(g.matrix));
  std::set<oracle::Tuple> group;
  if (!oracle::closure(rings, h.size(), gens, group, cap)) {
    rep.why = "closure above the oracle cap";
    return rep;
  }
  rep.order = group.size();
  if (group.count(image(h))) {
    rep.why = "image of h lies in the image of H";
    return rep;
  }
  if (rep.order != cert.closure_order) {
    rep.why = "closure order " + std::to_string(rep.order) + " vs stored " + std::to_string(cert.closure_order);
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace confirm
