#pragma once

#include <vector>

#include "sepcert/residue/residue_map.hpp"
#include "sepcert/units/units.hpp"

namespace sepcert::chevalley {

using exact::Integer;
using exact::IntVector;

inline constexpr long kDefaultSearchLimit = 100'000;

/// <U> = C_w x Z^k with explicit generators.
struct UnitStructure {
  Integer torsion_order = 1;                          // w
  std::optional<units::FieldElement> torsion_generator;
  std::vector<units::FieldElement> free_generators;   // k of them
};

UnitStructure unit_structure(const units::UnitList& u);

struct ChevalleyModulus {
  Integer q;
  Integer r;
  UnitStructure structure;
  Integer image_order = 1;               // |image of <U> in (Z[x]/(f,q))^x|
  std::vector<IntVector> kernel;         // basis, coordinates (t, e_1..e_k)
  long tested = 0;   // admissible candidates, including those cut by the rank bound
  long skipped = 0;  // candidates rejected by avoid, denominators or discriminant
};

struct SearchOptions {
  long search_limit = kDefaultSearchLimit;
  unsigned jobs = 1;
};

/// Smallest admissible q such that every element of <U> that is 1 mod q is an
/// r-th power in <U>. Throws ModulusNotFound past search_limit.
ChevalleyModulus chevalley_modulus(const units::UnitList& u, const Integer& r, const std::vector<Integer>& avoid,
                                   const SearchOptions& opts = {});

/// Kernel of <U> -> (Z[x]/(f,q))^x in (t, e) coordinates, plus the image order.
struct KernelData {
  std::vector<IntVector> basis;
  std::size_t image_order = 1;
};
KernelData unit_kernel(const UnitStructure& s, const residue::ResidueMap& map);

/// True when the kernel lies in the r-th powers (gcd(r,w) Z x r Z^k).
bool kernel_in_powers(const std::vector<IntVector>& kernel, const Integer& r, const Integer& w);

/// Primes that q must avoid so every unit and inverse reduces.
std::vector<Integer> unit_denominator_primes(const units::UnitList& u);

struct PowerResidueMap {
  ChevalleyModulus modulus;
  residue::HomDescription hom;
};

PowerResidueMap power_residue_map(const units::UnitList& u, const Integer& r, const std::vector<Integer>& avoid,
                                  const SearchOptions& opts = {});

}  // namespace sepcert::chevalley
