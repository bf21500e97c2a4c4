#include "sepcert/residue/closure.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "sepcert/error.hpp"

namespace sepcert::residue {

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<FiniteRing> rings, std::size_t n, std::vector<std::string> elements)
    : rings_(std::move(rings)), n_(n), elements_(std::move(elements)) {}

bool FiniteMatrixGroup::contains(const ImageTuple& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), encode(g));
}

std::string encode(const ImageTuple& g) {
  std::string out;
  for (const auto& m : g) append_encoding(out, m);
  return out;
}

ImageTuple multiply(const std::vector<FiniteRing>& rings, const ImageTuple& a, const ImageTuple& b) {
  ImageTuple out;
  for (std::size_t i = 0; i < rings.size(); ++i) out.push_back(multiply(rings[i], a[i], b[i]));
  return out;
}

ImageTuple identity(const std::vector<FiniteRing>& rings, std::size_t n) {
  ImageTuple out;
  for (const auto& r : rings) out.push_back(identity(r, n));
  return out;
}

FiniteMatrixGroup group_closure(const std::vector<FiniteRing>& rings, std::size_t n, const std::vector<ImageTuple>& gens,
                                std::size_t cap) {
  for (const auto& g : gens)
    for (std::size_t i = 0; i < rings.size(); ++i)
      if (!rings[i].is_unit(determinant(rings[i], g[i])))
        throw Error(ErrorCode::NotInvertible, "generator image not invertible over " + rings[i].to_string());

  std::unordered_set<std::string> seen;
  std::deque<ImageTuple> frontier;
  const ImageTuple id = identity(rings, n);
  seen.insert(encode(id));
  frontier.push_back(id);
  while (!frontier.empty()) {
    const ImageTuple cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      ImageTuple next = multiply(rings, cur, g);
      if (!seen.insert(encode(next)).second) continue;
      if (seen.size() > cap)
        throw Error(ErrorCode::CapExceeded, "closure exceeded " + std::to_string(cap) + " elements");
      frontier.push_back(std::move(next));
    }
  }
  std::vector<std::string> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return FiniteMatrixGroup(rings, n, std::move(elements));
}

FiniteMatrixGroup group_closure(const FiniteRing& ring, std::size_t n, const std::vector<FiniteMatrix>& gens,
                                std::size_t cap) {
  std::vector<ImageTuple> tuples;
  for (const auto& g : gens) tuples.push_back({g});
  return group_closure(std::vector<FiniteRing>{ring}, n, tuples, cap);
}

std::size_t element_order(const std::vector<FiniteRing>& rings, const ImageTuple& g, std::size_t cap) {
  const std::size_t n = g.front().n;
  const std::string id = encode(identity(rings, n));
  ImageTuple cur = g;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (encode(cur) == id) return k;
    cur = multiply(rings, cur, g);
  }
  throw Error(ErrorCode::CapExceeded, "element order exceeds " + std::to_string(cap));
}

std::vector<FiniteRing> rings_of(const HomDescription& hom) {
  std::vector<FiniteRing> out;
  for (const auto& c : hom.components) out.push_back(c.target());
  return out;
}

}  // namespace sepcert::residue
