#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wreathhom {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 20000;

/// Input description of a group: either a full Cayley table or a list of
/// permutation generators given as 0-based image arrays.
struct GroupSpec {
  std::string name;
  std::optional<std::vector<std::vector<std::int64_t>>> table;
  std::optional<std::vector<std::vector<std::int64_t>>> perm_generators;
};

/// A finite group stored as a dense multiplication table over element
/// indices 0..d-1. Element 0 is always the identity.
class FiniteGroup {
 public:
  using Id = Element;

  /// Validates the group axioms in the order: shape, identity, inverses,
  /// associativity. When the identity is not element 0 the labels of the
  /// identity and element 0 are swapped.
  static FiniteGroup from_table(std::string name,
                                const std::vector<std::vector<std::int64_t>> &table,
                                std::size_t cap = kDefaultElementCap);

  /// Breadth-first closure of the generated permutation group. Products follow
  /// function composition: (g*h)(i) = g(h(i)).
  static FiniteGroup from_permutations(
      std::string name, const std::vector<std::vector<std::int64_t>> &generators,
      std::size_t cap = kDefaultElementCap);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }

  std::span<const Element> generators() const noexcept { return generators_; }
  const std::string &name() const noexcept { return name_; }
  const std::vector<std::string> &element_names() const noexcept { return names_; }

  /// g x g^-1
  Element conjugate(Element x, Element g) const noexcept {
    return mul(mul(g, x), inv(g));
  }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Element power(Element x, std::uint64_t exponent) const noexcept;
  std::size_t element_order(Element x) const noexcept;

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<Element> closure(std::span<const Element> gens) const;

 private:
  FiniteGroup() = default;
  void finish(std::vector<Element> generators);

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
};

FiniteGroup build_group(const GroupSpec &spec, std::size_t cap = kDefaultElementCap);

/// Builtins: C1, C2, C3, C4, V4, S3, D4, Q8.
FiniteGroup builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

/// Cyclic group of order n as an addition table.
FiniteGroup cyclic_group(std::size_t n);

/// Full symmetric group on `degree` points, generated by a transposition and
/// an n-cycle.
FiniteGroup symmetric_group(std::size_t degree, std::size_t cap = kDefaultElementCap);

}  // namespace wreathhom
