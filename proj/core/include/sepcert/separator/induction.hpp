#pragma once

#include <vector>

#include "sepcert/residue/residue_map.hpp"
#include "sepcert/separator/abelian.hpp"
#include "sepcert/separator/options.hpp"

namespace sepcert::separator {

/// One pass of the rank induction for a single coset representative.
struct InductionNode {
  std::size_t depth = 0;
  std::size_t rank = 0;        // m
  std::size_t pivot = 0;       // s
  int case_id = 0;             // 0 base, 1 or 2
  Integer p = 1, D = 1, d = 1, ell = 0;
  std::vector<std::size_t> I;
  std::vector<Integer> q;
  Integer sbar_index = 1;      // [S : S-bar] from the Smith form
  Integer index_bound = 1;     // p^|I| D^(m-|I|)
  bool normalized = true;      // every g-bar_t has (s,s) entry 1
  bool decomposition = true;   // nu^d == kappa * prod z_i^q_i
  std::size_t ambient_size = 0;
  Integer modulus = 0;         // Chevalley modulus of the power map, 0 in the base case
  std::size_t retries = 0;
  std::vector<Matrix> gbar;              // normalized generators, in basis order
  std::vector<IntVector> gbar_exponents; // their exponents in the basis
};

struct InductionTrace {
  std::vector<InductionNode> nodes;
};

struct InductionContext {
  FieldPtr field;
  std::vector<Integer> avoid;
  std::vector<Matrix> gamma_triangular;  // upper triangular conjugated Gamma generators
  Options opts;
  InductionTrace* trace = nullptr;
};

/// phi with phi(x) outside phi(<gens>), for upper triangular commuting
/// unipotent-free generators and x not in <gens>. Finite index steps are
/// handled by products over coset representatives.
residue::HomDescription separate_in_group(const std::vector<Matrix>& gens, const Matrix& x, InductionContext& ctx,
                                          std::size_t depth = 0);

/// The base case: smallest admissible prime with phi(x) != 1.
residue::HomDescription separate_from_identity(const Matrix& x, const InductionContext& ctx);

}  // namespace sepcert::separator
