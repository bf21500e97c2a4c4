#pragma once

#include <optional>
#include <vector>

#include "sepcert/exact/int_matrix.hpp"
#include "sepcert/nfield/number_field.hpp"

namespace sepcert::units {

using exact::Integer;
using exact::IntVector;
using nfield::FieldElement;
using nfield::FieldPtr;

inline constexpr long kDefaultRelationBound = 8;

/// Explicit generators of a subgroup of K^x.
struct UnitList {
  FieldPtr field;
  std::vector<FieldElement> units;
  long relation_bound = kDefaultRelationBound;
};

/// prod u_i^{e_i}.
FieldElement evaluate(const UnitList& u, const IntVector& e);

struct Torsion {
  Integer order = 1;                        // p
  std::optional<FieldElement> generator;    // absent when p = 1
  IntVector generator_exponents;            // generator = prod u_i^{these}
};

/// Relations with prod u_i^{e_i} = 1, as a lattice basis (rows). Relations
/// between units of norm +-1 come from a bounded search of radius
/// relation_bound in the norm-valuation lattice; BoundExceeded is raised when
/// that box is too large to scan.
std::vector<IntVector> exponent_lattice(const UnitList& u);

/// Relations with prod u_i^{e_i} a root of unity (the saturation of the above).
std::vector<IntVector> torsion_lattice(const UnitList& u);

Torsion torsion_order(const UnitList& u);

struct UnitBasis {
  Torsion torsion;
  std::vector<std::size_t> indices;        // I, zero-based, ascending
  std::vector<IntVector> relations;        // exponent_lattice(u)
  Integer index = 1;                       // D = [<u> : <u_i^p, i in I>]
  std::vector<FieldElement> generators;    // z_i = u_i^p for i in I
  std::vector<IntVector> generator_exponents;
};

/// Greedy ascending choice of I. Throws AllTorsion when every unit is torsion.
UnitBasis free_basis(const UnitList& u);

/// Exponents e with prod u_i^{e_i} = x; NotInLattice if x is not in <u>.
IntVector discrete_log(const UnitList& u, const FieldElement& x);

struct Complement {
  std::vector<FieldElement> generators;    // T
  std::vector<IntVector> generator_exponents;  // in the ambient generators
  Integer index = 1;                       // d = [<ambient> : T G]
  std::vector<IntVector> g_exponents;      // G generators in ambient exponents
  std::vector<IntVector> ambient_relations;
};

/// Complement T of G = <g_gens> in <ambient>: lifts a basis of the free part
/// of <ambient>/G. g_gens must be free and lie in <ambient>.
Complement complement_subgroup(const UnitList& ambient, const std::vector<FieldElement>& g_gens);

struct PowerDecomposition {
  FieldElement kappa;
  std::vector<Integer> t_exponents;  // kappa = prod T_j^{these}
  std::vector<Integer> q;            // one per G generator
};

/// nu^d = kappa * prod z_i^{q_i} with kappa in T. Throws NotInProduct.
PowerDecomposition decompose_power(const FieldElement& nu, const Integer& d, const UnitList& ambient,
                                   const Complement& t, const std::vector<FieldElement>& g_gens);

}  // namespace sepcert::units
