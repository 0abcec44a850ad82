#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "wreathhom/counting.hpp"
#include "wreathhom/error.hpp"
#include "wreathhom/orbit_types.hpp"
#include "wreathhom/wreath.hpp"

namespace wreathhom {

/// Any finite group whose elements are the ids 0 .. order()-1.
template <class T>
concept GroupLike = requires(const T &t, typename T::Id a) {
  { t.order() } -> std::convertible_to<std::size_t>;
  { t.identity() } -> std::convertible_to<typename T::Id>;
  { t.mul(a, a) } -> std::convertible_to<typename T::Id>;
};

/// A wr S_n with on-the-fly multiplication. Ids are
/// rank(sigma) * |A|^n + decoration index, with permutations ranked
/// lexicographically.
class ExplicitWreath {
 public:
  using Id = std::uint64_t;
  inline static constexpr std::size_t kDefaultCap = 1000000;

  ExplicitWreath(AbelianGroup coefficients, std::size_t n, std::size_t cap = kDefaultCap);

  std::size_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return n_; }
  const AbelianGroup &coefficients() const noexcept { return coefficients_; }
  Id identity() const noexcept { return 0; }
  Id mul(Id a, Id b) const;

  WreathElement decode(Id x) const;
  Id encode(const WreathElement &x) const;

  /// The projection onto S_n.
  const std::vector<std::uint32_t> &projection(Id x) const { return perms_[x / decorations_]; }
  std::uint64_t projection_rank(Id x) const { return x / decorations_; }
  AbelianGroup::Index fold(Id x) const;

 private:
  std::uint64_t perm_rank(const std::vector<std::uint32_t> &perm) const;

  AbelianGroup coefficients_;
  std::size_t n_;
  std::uint64_t decorations_ = 1;  // |A|^n
  std::size_t order_ = 1;
  std::vector<std::vector<std::uint32_t>> perms_;
  std::vector<std::uint32_t> compose_;  // rank table, only for small n
};

/// Breadth-first factorization of every element of G over its generators:
/// element = parent[element] * generators[generator[element]].
struct WordTable {
  std::vector<Element> bfs_order;  // starts with the identity
  std::vector<Element> parent;
  std::vector<std::uint32_t> generator;
};

WordTable word_table(const FiniteGroup &group);

struct EnumerateOptions {
  /// Limit on the number of generator-image tuples left after pruning.
  std::uint64_t search_cap = 100000000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Every homomorphism G -> target, as the full value vector indexed by
/// elements of G. Generator images are pruned by order; each candidate is
/// extended along the word table and accepted iff the extension respects
/// multiplication. Results are ordered by candidate tuple.
template <GroupLike T>
std::vector<std::vector<typename T::Id>> enumerate_homs(const FiniteGroup &group, const T &target,
                                                        EnumerateOptions options = {}) {
  using Id = typename T::Id;
  auto gens = group.generators();
  const std::size_t d = group.order();
  const std::size_t r = gens.size();
  const WordTable words = word_table(group);

  auto power = [&](Id x, std::size_t e) {
    Id out = target.identity();
    for (std::size_t i = 0; i < e; ++i) out = target.mul(out, x);
    return out;
  };

  std::vector<std::vector<Id>> candidates(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t ord = group.element_order(gens[i]);
    for (Id x = 0; x < static_cast<Id>(target.order()); ++x)
      if (power(x, ord) == target.identity()) candidates[i].push_back(x);
  }
  long double tuples = 1;
  for (const auto &c : candidates) tuples *= static_cast<long double>(c.size());
  if (tuples > static_cast<long double>(options.search_cap))
    throw Error(ErrorKind::CapExceeded, "homomorphism search exceeds the cap of " +
                                            std::to_string(options.search_cap) + " candidates");

  if (r == 0) return {std::vector<Id>(d, target.identity())};

  auto search = [&](std::size_t first_lo, std::size_t first_hi) {
    std::vector<std::vector<Id>> found;
    std::vector<Id> images(r);
    std::vector<Id> values(d);
    auto check = [&]() {
      values[words.bfs_order[0]] = target.identity();
      for (std::size_t idx = 1; idx < d; ++idx) {
        Element x = words.bfs_order[idx];
        values[x] = target.mul(values[words.parent[x]], images[words.generator[x]]);
      }
      for (Element x = 0; x < d; ++x)
        for (std::size_t s = 0; s < r; ++s)
          if (values[group.mul(x, gens[s])] != target.mul(values[x], images[s])) return false;
      return true;
    };
    auto recurse = [&](auto &&self, std::size_t depth) -> void {
      if (depth == r) {
        if (check()) found.push_back(values);
        return;
      }
      for (Id x : candidates[depth]) {
        images[depth] = x;
        self(self, depth + 1);
      }
    };
    for (std::size_t i = first_lo; i < first_hi; ++i) {
      images[0] = candidates[0][i];
      recurse(recurse, 1);
    }
    return found;
  };

  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t first = candidates[0].size();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(first, 1)));
  std::vector<std::vector<std::vector<Id>>> parts(workers);
  if (workers <= 1) {
    parts[0] = search(0, first);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = first * w / workers, hi = first * (w + 1) / workers;
      threads.emplace_back([&, w, lo, hi] { parts[w] = search(lo, hi); });
    }
  }
  std::vector<std::vector<Id>> out;
  for (auto &p : parts)
    for (auto &h : p) out.push_back(std::move(h));
  return out;
}

/// Fiber counts of the fold map over all of Hom(G, A wr S_n), by brute force.
DistributionTable oracle_delta(const WreathModel &model, std::size_t n,
                               EnumerateOptions options = {});

/// Homomorphisms into C2 wr S_n whose every value has trivial fold, i.e.
/// that land in the type-D Weyl group.
std::uint64_t oracle_weyl_count(const FiniteGroup &group, std::size_t n,
                                EnumerateOptions options = {});

/// Number of permutations of the action's degree commuting with every
/// element image. Degree at most 8.
std::uint64_t centralizer_order(const PermutationAction &action);

/// Brute force over decorations of a fixed coset action: how many
/// homomorphisms lift it, tallied by fold (indexed like model.homs).
std::vector<BigInt> extension_fibers(const WreathModel &model, std::size_t class_id,
                                     std::uint64_t search_cap = 100000000);

/// Homomorphisms into A wr S_n sharing one permutation part sigma.
struct OracleStratum {
  std::vector<std::uint64_t> sigma;  // generator projection ranks
  bool has_fixed_point = false;
  std::vector<std::uint64_t> fibers;  // fold tallies, indexed like model.homs
};

std::vector<OracleStratum> oracle_strata(const WreathModel &model, std::size_t n,
                                         EnumerateOptions options = {});

}  // namespace wreathhom
