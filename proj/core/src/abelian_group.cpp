#include "wreathhom/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "wreathhom/error.hpp"

namespace wreathhom {

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Merges prime-power cyclic orders, grouped by prime and sorted descending,
// into ascending invariant factors.
std::vector<std::uint64_t> combine_primary(
    const std::map<std::uint64_t, std::vector<std::uint64_t>> &by_prime) {
  std::size_t rank = 0;
  for (const auto &[p, powers] : by_prime) rank = std::max(rank, powers.size());
  std::vector<std::uint64_t> factors(rank, 1);
  for (const auto &[p, powers] : by_prime)
    for (std::size_t r = 0; r < powers.size(); ++r) factors[r] *= powers[r];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::uint64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw Error(ErrorKind::InvalidAbelianGroup, "invariant factors must be at least 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw Error(ErrorKind::InvalidAbelianGroup,
                  "invariant factor " + std::to_string(factors_[i]) + " does not divide " +
                      std::to_string(factors_[i + 1]));
  }
  strides_.assign(factors_.size(), 1);
  order_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    if (__builtin_mul_overflow(order_, factors_[i], &order_))
      throw Error(ErrorKind::CapExceeded, "abelian group order overflows 64 bits");
  }
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::span<const std::uint64_t> orders) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (std::uint64_t n : orders) {
    if (n == 0) throw Error(ErrorKind::InvalidAbelianGroup, "cyclic factor of order 0");
    for (auto [p, e] : factorize(n)) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      by_prime[p].push_back(q);
    }
  }
  for (auto &[p, powers] : by_prime) std::sort(powers.rbegin(), powers.rend());
  return AbelianGroup(combine_primary(by_prime));
}

std::vector<std::uint64_t> AbelianGroup::coords(Index x) const {
  std::vector<std::uint64_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (x / strides_[i]) % factors_[i];
  return out;
}

AbelianGroup::Index AbelianGroup::index(std::span<const std::uint64_t> c) const {
  Index out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (c[i] % factors_[i]) * strides_[i];
  return out;
}

AbelianGroup::Index AbelianGroup::add(Index a, Index b) const {
  Index out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t x = (a / strides_[i]) % factors_[i];
    std::uint64_t y = (b / strides_[i]) % factors_[i];
    out += ((x + y) % factors_[i]) * strides_[i];
  }
  return out;
}

AbelianGroup::Index AbelianGroup::negate(Index a) const {
  Index out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t x = (a / strides_[i]) % factors_[i];
    out += ((factors_[i] - x) % factors_[i]) * strides_[i];
  }
  return out;
}

AbelianGroup::Index AbelianGroup::scale(Index a, std::uint64_t m) const {
  Index out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t x = (a / strides_[i]) % factors_[i];
    out += ((x * (m % factors_[i])) % factors_[i]) * strides_[i];
  }
  return out;
}

std::uint64_t AbelianGroup::element_order(Index a) const {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t x = (a / strides_[i]) % factors_[i];
    std::uint64_t o = factors_[i] / std::gcd(x, factors_[i]);
    out = std::lcm(out, o);
  }
  return out;
}

AbelianDecomposition decompose_abelian_table(const std::vector<std::vector<std::uint32_t>> &table) {
  using Elt = std::uint32_t;
  const std::size_t q = table.size();
  auto add = [&](Elt a, Elt b) { return table[a][b]; };
  auto times = [&](Elt a, std::uint64_t m) {
    Elt out = 0;
    for (std::uint64_t i = 0; i < m; ++i) out = add(out, a);
    return out;
  };
  auto order_of = [&](Elt a) {
    std::uint64_t n = 1;
    for (Elt y = a; y != 0; y = add(y, a)) ++n;
    return n;
  };

  struct Summand {
    Elt generator;
    std::uint64_t order;
  };
  std::map<std::uint64_t, std::vector<Summand>> summands;

  for (auto [p, exponent] : factorize(q)) {
    std::vector<Elt> sylow;
    for (Elt x = 0; x < q; ++x) {
      std::uint64_t o = order_of(x);
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(x);
    }

    std::vector<Summand> basis;
    // Span of the current basis: element -> coordinates.
    std::map<Elt, std::vector<std::uint64_t>> span{{0, {}}};
    while (span.size() < sylow.size()) {
      Elt best = 0;
      unsigned best_e = 0;
      std::uint64_t best_pe = 1;
      for (Elt x : sylow) {
        if (span.contains(x)) continue;
        unsigned e = 0;
        std::uint64_t pe = 1;
        for (Elt y = x; !span.contains(y); y = times(y, p)) {
          ++e;
          pe *= p;
        }
        if (e > best_e) {
          best = x;
          best_e = e;
          best_pe = pe;
        }
      }
      // Lift so that the new generator meets the span trivially.
      const auto &c = span.at(times(best, best_pe));
      Elt lifted = best;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (c[j] % best_pe != 0)
          throw Error(ErrorKind::InvalidArgument, "abelian decomposition: table is not abelian");
        std::uint64_t m = c[j] / best_pe;
        Elt correction = times(basis[j].generator, m);
        Elt neg = 0;
        while (add(neg, correction) != 0) ++neg;
        lifted = add(lifted, neg);
      }
      if (order_of(lifted) != best_pe)
        throw Error(ErrorKind::InvalidArgument, "abelian decomposition: lift failed");

      std::map<Elt, std::vector<std::uint64_t>> grown;
      for (const auto &[s, coords] : span) {
        Elt y = s;
        for (std::uint64_t t = 0; t < best_pe; ++t) {
          auto v = coords;
          v.push_back(t);
          grown.emplace(y, std::move(v));
          y = add(y, lifted);
        }
      }
      span = std::move(grown);
      basis.push_back({lifted, best_pe});
    }
    (void)exponent;
    std::sort(basis.begin(), basis.end(),
              [](const Summand &a, const Summand &b) { return a.order > b.order; });
    summands[p] = std::move(basis);
  }

  std::map<std::uint64_t, std::vector<std::uint64_t>> orders;
  std::size_t rank = 0;
  for (const auto &[p, list] : summands) {
    rank = std::max(rank, list.size());
    for (const Summand &s : list) orders[p].push_back(s.order);
  }
  // Invariant-factor generators, largest first, then reversed.
  std::vector<Elt> gens(rank, 0);
  for (const auto &[p, list] : summands)
    for (std::size_t r = 0; r < list.size(); ++r) gens[r] = add(gens[r], list[r].generator);
  std::reverse(gens.begin(), gens.end());

  AbelianDecomposition out{AbelianGroup(combine_primary(orders)), {}};
  out.iso.assign(q, 0);
  std::vector<char> hit(q, 0);
  for (AbelianGroup::Index i = 0; i < out.group.order(); ++i) {
    auto c = out.group.coords(i);
    Elt x = 0;
    for (std::size_t r = 0; r < c.size(); ++r) x = add(x, times(gens[r], c[r]));
    if (hit[x]) throw Error(ErrorKind::InvalidArgument, "abelian decomposition is not injective");
    hit[x] = 1;
    out.iso[x] = i;
  }
  if (out.group.order() != q)
    throw Error(ErrorKind::InvalidArgument, "abelian decomposition has the wrong order");
  return out;
}

}  // namespace wreathhom
