#include "wreathhom/wreath.hpp"

#include <numeric>

namespace wreathhom {

WreathElement wreath_identity(std::size_t n) {
  WreathElement e;
  e.perm.resize(n);
  std::iota(e.perm.begin(), e.perm.end(), 0u);
  e.decor.assign(n, 0);
  return e;
}

WreathElement wreath_multiply(const AbelianGroup &coefficients, const WreathElement &lhs,
                              const WreathElement &rhs) {
  const std::size_t n = rhs.perm.size();
  WreathElement out;
  out.perm.resize(n);
  out.decor.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.perm[i] = lhs.perm[rhs.perm[i]];
    out.decor[i] = coefficients.add(rhs.decor[i], lhs.decor[rhs.perm[i]]);
  }
  return out;
}

AbelianGroup::Index fold(const AbelianGroup &coefficients, const WreathElement &x) {
  AbelianGroup::Index sum = 0;
  for (auto a : x.decor) sum = coefficients.add(sum, a);
  return sum;
}

}  // namespace wreathhom
