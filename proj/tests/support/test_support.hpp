#pragma once

// Brute-force helpers shared by the test suites. Nothing here calls into the
// counting, orbit-type or sampling code paths it is used to check.

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wreathhom/abelian_group.hpp"
#include "wreathhom/finite_group.hpp"

namespace wreathhom::testing {

inline const std::vector<std::string> &desk_groups() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C4", "V4", "S3"};
  return names;
}

inline std::vector<AbelianGroup> desk_coefficients() {
  return {AbelianGroup({2}), AbelianGroup({3}), AbelianGroup({2, 2})};
}

/// Counts subsets of G closed under multiplication (and hence subgroups,
/// G being finite). Exponential in |G|.
inline std::size_t brute_force_subgroup_count(const FiniteGroup &group) {
  const std::size_t d = group.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    if (!(mask & 1u)) continue;  // must contain the identity
    bool closed = true;
    for (Element a = 0; a < d && closed; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (Element b = 0; b < d && closed; ++b)
        if ((mask >> b) & 1u) closed = (mask >> group.mul(a, b)) & 1u;
    }
    if (closed) ++count;
  }
  return count;
}

/// Counts maps G -> A respecting addition by trying all |A|^|G| functions.
inline std::uint64_t brute_force_abelian_hom_count(const FiniteGroup &group, const AbelianGroup &A) {
  const std::size_t d = group.order();
  std::vector<AbelianGroup::Index> f(d, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (Element a = 0; a < d && ok; ++a)
      for (Element b = 0; b < d && ok; ++b) ok = f[group.mul(a, b)] == A.add(f[a], f[b]);
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < d && ++f[pos] == A.order()) f[pos++] = 0;
    if (pos == d) break;
  }
  return count;
}

/// Number of x with x^m = e.
inline std::size_t count_roots_of_unity(const FiniteGroup &group, std::uint64_t m) {
  std::size_t count = 0;
  for (Element x = 0; x < group.order(); ++x)
    if (group.power(x, m) == group.identity()) ++count;
  return count;
}

/// Upper-tail p-value of Pearson's statistic against `probs`. Cells with zero
/// expected mass must have zero observations; they are dropped.
inline double chi_square_p_value(const std::vector<std::uint64_t> &observed,
                                 const std::vector<double> &probs) {
  std::uint64_t total = std::accumulate(observed.begin(), observed.end(), std::uint64_t{0});
  double statistic = 0.0;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (probs[i] == 0.0) {
      if (observed[i] != 0) return 0.0;
      continue;
    }
    double expected = probs[i] * static_cast<double>(total);
    double diff = static_cast<double>(observed[i]) - expected;
    statistic += diff * diff / expected;
    ++cells;
  }
  if (cells < 2) return 1.0;
  boost::math::chi_squared dist(static_cast<double>(cells - 1));
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

/// Random permutation group on `degree` points with `gens` generators.
inline FiniteGroup random_permutation_group(std::mt19937_64 &rng, std::size_t degree, std::size_t gens) {
  std::vector<std::vector<std::int64_t>> generators;
  for (std::size_t i = 0; i < gens; ++i) {
    std::vector<std::int64_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    generators.push_back(std::move(p));
  }
  return FiniteGroup::from_permutations("random", generators);
}

/// Direct product of cyclic groups as an addition table.
inline std::vector<std::vector<std::uint32_t>> cyclic_product_table(const std::vector<std::uint64_t> &orders) {
  std::uint64_t q = 1;
  for (auto o : orders) q *= o;
  auto digits = [&](std::uint64_t x) {
    std::vector<std::uint64_t> v(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      v[i] = x % orders[i];
      x /= orders[i];
    }
    return v;
  };
  std::vector<std::vector<std::uint32_t>> table(q, std::vector<std::uint32_t>(q));
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b) {
      auto da = digits(a), db = digits(b);
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + (da[i] + db[i]) % orders[i];
      table[a][b] = static_cast<std::uint32_t>(idx);
    }
  return table;
}

}  // namespace wreathhom::testing
