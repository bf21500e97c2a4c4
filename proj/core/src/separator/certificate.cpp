#include "sepcert/separator/certificate.hpp"

#include "sepcert/error.hpp"

namespace sepcert::separator {

namespace {

std::vector<LabeledImage> images_of(const HomDescription& hom, const GroupDescription& g) {
  std::vector<LabeledImage> out;
  for (const auto& gen : g.generators) out.push_back({gen.label, residue::apply_matrix(hom, gen.matrix)});
  return out;
}

}  // namespace

std::optional<SeparationCertificate> try_certificate(const HomDescription& hom, const GroupDescription& gamma,
                                                     const GroupDescription& H, const Matrix& h, std::size_t cap) {
  SeparationCertificate cert;
  cert.hom = hom;
  cert.gamma_images = images_of(hom, gamma);
  cert.H_images = images_of(hom, H);
  cert.h_image = residue::apply_matrix(hom, h);
  std::vector<ImageTuple> gens;
  for (const auto& x : cert.H_images) gens.push_back(x.image);
  const auto closure = residue::group_closure(residue::rings_of(hom), h.size(), gens, cap);
  if (closure.contains(cert.h_image)) return std::nullopt;
  cert.closure_order = closure.order();
  return cert;
}

Verdict verify_certificate(const SeparationCertificate& cert, const GroupDescription& gamma, const GroupDescription& H,
                           const Matrix& h, std::size_t cap) {
  if (cert.hom.components.empty()) return {false, "image mismatch: no residue maps"};
  const auto field = gamma.field ? gamma.field : H.field;
  for (const auto& c : cert.hom.components) {
    // alpha -> x must respect the minimal polynomial.
    if (!residue::divides_mod(c.target().poly(), field->minimal_poly(), c.target().modulus()))
      return {false, "image mismatch: " + c.target().to_string() + " is not a quotient of the field"};
  }
  const HomDescription hom = [&] {
    HomDescription rebuilt;
    for (const auto& c : cert.hom.components) rebuilt.components.emplace_back(field, c.target(), c.avoid());
    return rebuilt;
  }();
  auto same = [&](const std::vector<LabeledImage>& stored, const GroupDescription& g, const char* what) -> Verdict {
    if (stored.size() != g.generators.size()) return {false, std::string("image mismatch: wrong number of ") + what + " images"};
    for (std::size_t i = 0; i < stored.size(); ++i) {
      if (stored[i].label != g.generators[i].label)
        return {false, std::string("image mismatch: ") + what + " label " + stored[i].label};
      if (residue::apply_matrix(hom, g.generators[i].matrix) != stored[i].image)
        return {false, std::string("image mismatch: ") + what + " generator " + stored[i].label};
    }
    return {true, ""};
  };
  try {
    if (auto v = same(cert.gamma_images, gamma, "Gamma"); !v.ok) return v;
    if (auto v = same(cert.H_images, H, "H"); !v.ok) return v;
    std::vector<ImageTuple> gens;
    for (const auto& x : cert.H_images) gens.push_back(x.image);
    const auto closure = residue::group_closure(residue::rings_of(hom), h.size(), gens, cap);
    if (closure.order() != cert.closure_order)
      return {false, "image mismatch: closure order " + std::to_string(closure.order()) + " != " + std::to_string(cert.closure_order)};
    const ImageTuple hi = residue::apply_matrix(hom, h);
    if (closure.contains(hi)) return {false, "membership: image of h lies in the image of H"};
    if (hi != cert.h_image) return {false, "image mismatch: h"};
  } catch (const Error& e) {
    return {false, std::string("image mismatch: ") + e.what()};
  }
  return {true, "ok"};
}

}  // namespace sepcert::separator
