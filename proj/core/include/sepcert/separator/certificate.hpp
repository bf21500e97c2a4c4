#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepcert/nfield/matrix.hpp"
#include "sepcert/residue/closure.hpp"

namespace sepcert::separator {

using nfield::GroupDescription;
using nfield::Matrix;
using residue::HomDescription;
using residue::ImageTuple;

struct LabeledImage {
  std::string label;
  ImageTuple image;
};

/// A finite quotient phi: Gamma -> F with phi(h) outside phi(H).
struct SeparationCertificate {
  HomDescription hom;
  std::vector<LabeledImage> gamma_images;
  std::vector<LabeledImage> H_images;
  ImageTuple h_image;
  std::size_t closure_order = 0;
  std::string method;                // "fast", "borel", "induction", "lift"
  std::optional<Matrix> conjugator;  // P with P^-1 H P upper triangular
};

/// Applies hom to Gamma, H and h, closes the H images and checks h.
/// Throws CapExceeded, ResidueUndefined; returns nullopt when h's image
/// lands inside the closure.
std::optional<SeparationCertificate> try_certificate(const HomDescription& hom, const GroupDescription& gamma,
                                                     const GroupDescription& H, const Matrix& h, std::size_t cap);

struct Verdict {
  bool ok = false;
  std::string reason;
};

/// Rebuilds every image from the residue maps and re-runs the closure.
/// Reasons start with "image mismatch" or "membership".
Verdict verify_certificate(const SeparationCertificate& cert, const GroupDescription& gamma, const GroupDescription& H,
                           const Matrix& h, std::size_t cap = residue::kDefaultClosureCap);

}  // namespace sepcert::separator
