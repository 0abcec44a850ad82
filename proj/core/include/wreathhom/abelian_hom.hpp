#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wreathhom/abelian_group.hpp"
#include "wreathhom/finite_group.hpp"
#include "wreathhom/subgroups.hpp"

namespace wreathhom {

/// |Hom(B, A)| = prod_{i,j} gcd(b_i, a_j).
std::uint64_t hom_count_abelian(const AbelianGroup &source, const AbelianGroup &target);

/// A homomorphism between abelian groups given by the image of each
/// invariant-factor generator of the source.
using AbelianHom = std::vector<AbelianGroup::Index>;

/// All homomorphisms source -> target, lexicographic in the generator images.
std::vector<AbelianHom> enumerate_abelian_homs(const AbelianGroup &source,
                                               const AbelianGroup &target);

AbelianGroup::Index apply_abelian_hom(const AbelianHom &hom, const AbelianGroup &source,
                                      const AbelianGroup &target, AbelianGroup::Index x);

/// A homomorphism G -> A stored as its full value vector.
struct HomToA {
  std::vector<AbelianGroup::Index> values;

  friend auto operator<=>(const HomToA &, const HomToA &) = default;
};

bool is_homomorphism(const FiniteGroup &group, const AbelianGroup &target, const HomToA &hom);

/// Hom(G, A) as a finite abelian group under pointwise addition. Elements are
/// sorted lexicographically by value vector, so index 0 is the trivial map.
class HomGroup {
 public:
  HomGroup(AbelianGroup target, std::vector<HomToA> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const HomToA &operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<HomToA> &elements() const noexcept { return elements_; }
  const AbelianGroup &target() const noexcept { return target_; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size() + b]; }
  std::optional<std::size_t> find(const HomToA &hom) const;
  /// Throws when `hom` is not an element.
  std::size_t index_of(const HomToA &hom) const;

 private:
  AbelianGroup target_;
  std::vector<HomToA> elements_;
  std::map<HomToA, std::size_t> lookup_;
  std::vector<std::size_t> add_;
};

/// Lifts Hom(G^ab, A) through the abelianization map.
HomGroup hom_group(const FiniteGroup &group, const AbelianGroup &target);

}  // namespace wreathhom
