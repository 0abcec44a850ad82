#pragma once

#include <cstdint>
#include <vector>

#include "wreathhom/abelian_group.hpp"

namespace wreathhom {

/// An element (sigma; a_0, ..., a_{n-1}) of A wr S_n.
///
/// Product convention: (sigma; a)(tau; b) = (sigma tau; c) with
/// c_i = b_i + a_{tau(i)}, i.e. the left factor's decorations are permuted by
/// the right factor's permutation. Permutations compose as functions,
/// (sigma tau)(i) = sigma(tau(i)).
struct WreathElement {
  std::vector<std::uint32_t> perm;
  std::vector<AbelianGroup::Index> decor;

  friend bool operator==(const WreathElement &, const WreathElement &) = default;
};

WreathElement wreath_identity(std::size_t n);
WreathElement wreath_multiply(const AbelianGroup &coefficients, const WreathElement &lhs,
                              const WreathElement &rhs);

/// Sum of all decorations.
AbelianGroup::Index fold(const AbelianGroup &coefficients, const WreathElement &x);

}  // namespace wreathhom
