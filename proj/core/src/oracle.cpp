#include "wreathhom/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wreathhom {

ExplicitWreath::ExplicitWreath(AbelianGroup coefficients, std::size_t n, std::size_t cap)
    : coefficients_(std::move(coefficients)), n_(n) {
  long double size = 1;
  for (std::size_t i = 1; i <= n; ++i) size *= static_cast<long double>(i);
  for (std::size_t i = 0; i < n; ++i) size *= static_cast<long double>(coefficients_.order());
  if (size > static_cast<long double>(cap))
    throw Error(ErrorKind::CapExceeded, "A wr S_" + std::to_string(n) + " has more than " +
                                            std::to_string(cap) + " elements");
  for (std::size_t i = 0; i < n; ++i) decorations_ *= coefficients_.order();

  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do perms_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  order_ = perms_.size() * decorations_;

  if (perms_.size() <= 720) {
    const std::size_t m = perms_.size();
    compose_.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<std::uint32_t> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = perms_[a][perms_[b][i]];
        compose_[a * m + b] = static_cast<std::uint32_t>(perm_rank(c));
      }
  }
}

std::uint64_t ExplicitWreath::perm_rank(const std::vector<std::uint32_t> &perm) const {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (n_ - i) + smaller;
  }
  return rank;
}

WreathElement ExplicitWreath::decode(Id x) const {
  WreathElement e;
  e.perm = perms_[x / decorations_];
  e.decor.resize(n_);
  std::uint64_t rest = x % decorations_;
  for (std::size_t i = n_; i-- > 0;) {
    e.decor[i] = rest % coefficients_.order();
    rest /= coefficients_.order();
  }
  return e;
}

ExplicitWreath::Id ExplicitWreath::encode(const WreathElement &x) const {
  Id decor = 0;
  for (std::size_t i = 0; i < n_; ++i) decor = decor * coefficients_.order() + x.decor[i];
  return perm_rank(x.perm) * decorations_ + decor;
}

ExplicitWreath::Id ExplicitWreath::mul(Id a, Id b) const {
  const std::uint64_t ra = a / decorations_, rb = b / decorations_;
  const auto &pb = perms_[rb];
  const std::uint64_t q = coefficients_.order();
  // Decoration digits, most significant first.
  std::uint64_t da = a % decorations_, db = b % decorations_;
  std::vector<AbelianGroup::Index> ax(n_), bx(n_);
  for (std::size_t i = n_; i-- > 0;) {
    ax[i] = da % q;
    da /= q;
    bx[i] = db % q;
    db /= q;
  }
  Id decor = 0;
  for (std::size_t i = 0; i < n_; ++i)
    decor = decor * q + coefficients_.add(bx[i], ax[pb[i]]);

  std::uint64_t rc;
  if (!compose_.empty()) {
    rc = compose_[ra * perms_.size() + rb];
  } else {
    std::vector<std::uint32_t> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = perms_[ra][pb[i]];
    rc = perm_rank(c);
  }
  return rc * decorations_ + decor;
}

AbelianGroup::Index ExplicitWreath::fold(Id x) const {
  AbelianGroup::Index sum = 0;
  std::uint64_t rest = x % decorations_;
  for (std::size_t i = 0; i < n_; ++i) {
    sum = coefficients_.add(sum, rest % coefficients_.order());
    rest /= coefficients_.order();
  }
  return sum;
}

WordTable word_table(const FiniteGroup &group) {
  WordTable words;
  const std::size_t d = group.order();
  words.parent.assign(d, group.identity());
  words.generator.assign(d, 0);
  std::vector<char> seen(d, 0);
  words.bfs_order.push_back(group.identity());
  seen[group.identity()] = 1;
  auto gens = group.generators();
  for (std::size_t head = 0; head < words.bfs_order.size(); ++head) {
    Element x = words.bfs_order[head];
    for (std::uint32_t s = 0; s < gens.size(); ++s) {
      Element y = group.mul(x, gens[s]);
      if (seen[y]) continue;
      seen[y] = 1;
      words.parent[y] = x;
      words.generator[y] = s;
      words.bfs_order.push_back(y);
    }
  }
  if (words.bfs_order.size() != d)
    throw Error(ErrorKind::InvalidArgument, "generators do not generate the group");
  return words;
}

namespace {

std::size_t fold_index(const WreathModel &model, const ExplicitWreath &wreath,
                       const std::vector<ExplicitWreath::Id> &values) {
  HomToA psi;
  psi.values.reserve(values.size());
  for (auto v : values) psi.values.push_back(wreath.fold(v));
  return model.homs.index_of(psi);
}

}  // namespace

DistributionTable oracle_delta(const WreathModel &model, std::size_t n, EnumerateOptions options) {
  ExplicitWreath wreath(model.coefficients, n);
  std::vector<BigInt> fibers(model.homs.size(), 0);
  for (const auto &values : enumerate_homs(model.group, wreath, options))
    fibers[fold_index(model, wreath, values)] += 1;
  return distribution_from_fibers(n, std::move(fibers));
}

std::uint64_t oracle_weyl_count(const FiniteGroup &group, std::size_t n, EnumerateOptions options) {
  ExplicitWreath wreath(AbelianGroup({2}), n);
  std::uint64_t count = 0;
  for (const auto &values : enumerate_homs(group, wreath, options))
    if (std::all_of(values.begin(), values.end(), [&](auto v) { return wreath.fold(v) == 0; }))
      ++count;
  return count;
}

std::uint64_t centralizer_order(const PermutationAction &action) {
  const std::size_t k = action.degree;
  if (k > 8)
    throw Error(ErrorKind::CapExceeded, "centralizer_order: degree " + std::to_string(k) +
                                            " exceeds 8");
  std::vector<std::uint32_t> p(k);
  std::iota(p.begin(), p.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool commutes = true;
    for (const auto &image : action.images) {
      for (std::size_t i = 0; i < k && commutes; ++i) commutes = p[image[i]] == image[p[i]];
      if (!commutes) break;
    }
    if (commutes) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::vector<BigInt> extension_fibers(const WreathModel &model, std::size_t class_id,
                                     std::uint64_t search_cap) {
  const FiniteGroup &group = model.group;
  const AbelianGroup &A = model.coefficients;
  const OrbitType &type = model.orbit_types.at(class_id);
  const std::size_t k = type.action.degree;
  auto gens = group.generators();

  long double space = 1;
  for (std::size_t i = 0; i < k * gens.size(); ++i) space *= static_cast<long double>(A.order());
  if (space > static_cast<long double>(search_cap))
    throw Error(ErrorKind::CapExceeded, "extension_fibers: decoration space exceeds the cap");

  const WordTable words = word_table(group);
  std::vector<WreathElement> images(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    images[s].perm = type.action.images[gens[s]];
    images[s].decor.assign(k, 0);
  }

  std::vector<BigInt> fibers(model.homs.size(), 0);
  std::vector<WreathElement> values(group.order());
  const std::size_t slots = k * gens.size();
  std::vector<AbelianGroup::Index> digits(slots, 0);
  while (true) {
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (std::size_t j = 0; j < k; ++j) images[s].decor[j] = digits[s * k + j];

    values[group.identity()] = wreath_identity(k);
    for (std::size_t idx = 1; idx < group.order(); ++idx) {
      Element x = words.bfs_order[idx];
      values[x] = wreath_multiply(A, values[words.parent[x]], images[words.generator[x]]);
    }
    bool ok = true;
    for (Element x = 0; x < group.order() && ok; ++x)
      for (std::size_t s = 0; s < gens.size() && ok; ++s)
        ok = values[group.mul(x, gens[s])] == wreath_multiply(A, values[x], images[s]);
    if (ok) {
      HomToA psi;
      for (const auto &v : values) psi.values.push_back(fold(A, v));
      fibers[model.homs.index_of(psi)] += 1;
    }

    std::size_t pos = 0;
    while (pos < slots && ++digits[pos] == A.order()) digits[pos++] = 0;
    if (pos == slots) break;
  }
  return fibers;
}

std::vector<OracleStratum> oracle_strata(const WreathModel &model, std::size_t n,
                                         EnumerateOptions options) {
  ExplicitWreath wreath(model.coefficients, n);
  auto gens = model.group.generators();
  std::map<std::vector<std::uint64_t>, OracleStratum> strata;
  for (const auto &values : enumerate_homs(model.group, wreath, options)) {
    std::vector<std::uint64_t> key;
    for (Element s : gens) key.push_back(wreath.projection_rank(values[s]));
    auto [it, inserted] = strata.try_emplace(key);
    OracleStratum &stratum = it->second;
    if (inserted) {
      stratum.sigma = key;
      stratum.fibers.assign(model.homs.size(), 0);
      for (std::uint32_t p = 0; p < n && !stratum.has_fixed_point; ++p)
        stratum.has_fixed_point = std::all_of(gens.begin(), gens.end(), [&](Element s) {
          return wreath.projection(values[s])[p] == p;
        });
    }
    stratum.fibers[fold_index(model, wreath, values)] += 1;
  }
  std::vector<OracleStratum> out;
  for (auto &[key, s] : strata) out.push_back(std::move(s));
  return out;
}

}  // namespace wreathhom
