#pragma once

#include <cstdint>
#include <vector>

#include "wreathhom/abelian_hom.hpp"
#include "wreathhom/bigint.hpp"
#include "wreathhom/subgroups.hpp"

namespace wreathhom {

/// Transfer G -> U^ab: Ver(g) = sum_j proj(t_{g.j}^-1 g t_j).
struct TransferMap {
  std::vector<AbelianGroup::Index> values;  // indexed by element of G
};

TransferMap transfer_map(const FiniteGroup &group, const PermutationAction &action,
                         const Abelianization &abelianization);

/// Counting data for one orbit type G/U.
struct OrbitTypeData {
  std::size_t class_id = 0;
  std::size_t k = 1;  // orbit size (G:U)
  std::size_t c = 1;  // centralizer order of the coset action
  /// |A|^(k-1) |Hom(U, A)|: extensions of the coset action over one orbit.
  BigInt w;
  /// N[psi]: extensions whose fold contribution is the element psi of Hom(G, A).
  std::vector<BigInt> N;
};

OrbitTypeData orbit_type_data(const FiniteGroup &group, const AbelianGroup &coefficients,
                              std::size_t class_id, const SubgroupClass &subgroup,
                              const Abelianization &abelianization, const TransferMap &transfer,
                              const HomGroup &homs);

/// Everything known about one subgroup class U_i.
struct OrbitType {
  SubgroupClass subgroup;
  PermutationAction action;
  Abelianization abelianization;
  TransferMap transfer;
  /// Hom(U^ab, A), indexed consistently with the sampler.
  std::vector<AbelianHom> local_homs;
  OrbitTypeData data;
};

/// Precomputed orbit-type catalogue for the pair (G, A). Immutable.
struct WreathModel {
  FiniteGroup group;
  AbelianGroup coefficients;
  HomGroup homs;
  std::vector<OrbitType> orbit_types;  // full group last

  std::size_t class_count() const noexcept { return orbit_types.size(); }
  const OrbitType &full_group_type() const { return orbit_types.back(); }
};

WreathModel build_wreath_model(FiniteGroup group, AbelianGroup coefficients);

}  // namespace wreathhom
