#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wreathhom {

/// A finite abelian group Z/e1 x ... x Z/es with e1 | e2 | ... | es, each
/// factor at least 2. Elements are addressed by a mixed-radix index whose
/// most significant digit is the first coordinate, so index order agrees
/// with lexicographic order of coordinate vectors.
class AbelianGroup {
 public:
  using Index = std::uint64_t;

  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::uint64_t> invariant_factors);

  /// Normalizes an arbitrary product of cyclic groups (factors of 1 allowed)
  /// to invariant-factor form, e.g. {2, 3} -> {6} and {4, 6} -> {2, 12}.
  static AbelianGroup from_cyclic_orders(std::span<const std::uint64_t> orders);

  const std::vector<std::uint64_t> &invariant_factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  Index order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return factors_.empty(); }

  std::vector<std::uint64_t> coords(Index x) const;
  Index index(std::span<const std::uint64_t> coords) const;

  Index add(Index a, Index b) const;
  Index negate(Index a) const;
  Index scale(Index a, std::uint64_t m) const;
  std::uint64_t element_order(Index a) const;

  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;

 private:
  std::vector<std::uint64_t> factors_;
  std::vector<Index> strides_;
  Index order_ = 1;
};

/// Result of decomposing an abelian group given by its addition table.
struct AbelianDecomposition {
  AbelianGroup group;
  /// Table element -> index in `group`. A group isomorphism.
  std::vector<AbelianGroup::Index> iso;
};

/// `table` is a q x q addition table of an abelian group with identity 0.
/// Splits into Sylow subgroups, peels maximal-order cyclic summands from
/// each and recombines them into invariant factors.
AbelianDecomposition decompose_abelian_table(const std::vector<std::vector<std::uint32_t>> &table);

}  // namespace wreathhom
