#pragma once

#include <string>
#include <vector>

#include "sepcert/residue/residue_map.hpp"

namespace sepcert::residue {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Finite subgroup of a product of GL_n(R_i), stored as the sorted list of
/// canonical encodings of its elements.
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup(std::vector<FiniteRing> rings, std::size_t n, std::vector<std::string> elements);

  const std::vector<FiniteRing>& rings() const { return rings_; }
  std::size_t n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string>& encodings() const { return elements_; }
  bool contains(const ImageTuple& g) const;

 private:
  std::vector<FiniteRing> rings_;
  std::size_t n_;
  std::vector<std::string> elements_;
};

std::string encode(const ImageTuple& g);
ImageTuple multiply(const std::vector<FiniteRing>& rings, const ImageTuple& a, const ImageTuple& b);
ImageTuple identity(const std::vector<FiniteRing>& rings, std::size_t n);

/// Breadth-first closure under right multiplication by the generators.
/// Throws CapExceeded once more than `cap` elements appear, NotInvertible for
/// a generator with non-unit determinant.
FiniteMatrixGroup group_closure(const std::vector<FiniteRing>& rings, std::size_t n, const std::vector<ImageTuple>& gens,
                                std::size_t cap = kDefaultClosureCap);

FiniteMatrixGroup group_closure(const FiniteRing& ring, std::size_t n, const std::vector<FiniteMatrix>& gens,
                                std::size_t cap = kDefaultClosureCap);

/// Multiplicative order of a single element (bounded by cap).
std::size_t element_order(const std::vector<FiniteRing>& rings, const ImageTuple& g, std::size_t cap = kDefaultClosureCap);

std::vector<FiniteRing> rings_of(const HomDescription& hom);

}  // namespace sepcert::residue
