#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "wreathhom/abelian_group.hpp"
#include "wreathhom/finite_group.hpp"

namespace wreathhom {

/// One conjugacy class of subgroups, represented by its lexicographically
/// smallest member (as a sorted element list).
struct SubgroupClass {
  std::vector<Element> elements;
  std::vector<Element> generators;
  std::size_t index = 1;             // (G:U)
  std::size_t normalizer_order = 1;  // |N_G(U)|
  std::size_t centralizer_order = 1; // |N_G(U)| / |U|
  std::size_t class_size = 1;        // number of conjugates
  bool is_full_group = false;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Element x) const;
};

/// Every subgroup of G as a sorted element list, in lexicographic order.
std::vector<std::vector<Element>> all_subgroups(const FiniteGroup &group);

/// Conjugacy classes of subgroups ordered by ascending order, ties broken by
/// the representative; the full group is last.
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup &group);

/// Left-multiplication action of G on the left cosets G/U.
struct PermutationAction {
  std::size_t degree = 0;
  /// images[g][j] = index of the coset g t_j U.
  std::vector<std::vector<std::uint32_t>> images;
  std::vector<Element> transversal;
  /// Coset index of every group element.
  std::vector<std::uint32_t> point_of;

  std::uint32_t image(Element g, std::uint32_t point) const { return images[g][point]; }
};

/// Transversal of smallest coset members, ordered by that member; the
/// identity represents point 0.
PermutationAction coset_action(const FiniteGroup &group, const SubgroupClass &subgroup);

/// Same action with a caller-chosen transversal. `transversal[0]` must lie in
/// U and every coset must be hit exactly once.
PermutationAction coset_action(const FiniteGroup &group, const SubgroupClass &subgroup,
                               std::span<const Element> transversal);

struct Abelianization {
  inline static constexpr AbelianGroup::Index kOutside =
      std::numeric_limits<AbelianGroup::Index>::max();

  AbelianGroup group;
  std::vector<Element> commutator_subgroup;
  /// Length-d map: U-elements to their image in `group`, kOutside elsewhere.
  std::vector<AbelianGroup::Index> projection;
};

Abelianization abelianization(const FiniteGroup &group, const SubgroupClass &subgroup);

/// Abelianization of the whole group.
Abelianization abelianization(const FiniteGroup &group);

/// Subgroup record for G itself (index 1).
SubgroupClass full_group_class(const FiniteGroup &group);

/// Number of subgroups of index 2.
std::size_t index_two_subgroup_count(std::span<const SubgroupClass> classes);

}  // namespace wreathhom
