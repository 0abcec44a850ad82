#include "wreathhom/sampler.hpp"

#include <algorithm>
#include <numeric>

#include "wreathhom/counting.hpp"
#include "wreathhom/error.hpp"

namespace wreathhom {

namespace {

std::uint64_t uniform_index(std::uint64_t size, Rng &rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, size - 1)(rng);
}

}  // namespace

std::vector<WreathElement> evaluate(const FiniteGroup &group, const AbelianGroup &coefficients,
                                    const WreathHom &hom) {
  auto gens = group.generators();
  if (hom.generator_images.size() != gens.size())
    throw Error(ErrorKind::InvalidArgument, "wrong number of generator images");
  std::vector<WreathElement> images(group.order());
  std::vector<char> seen(group.order(), 0);
  std::vector<Element> queue{group.identity()};
  images[group.identity()] = wreath_identity(hom.n);
  seen[group.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (std::size_t r = 0; r < gens.size(); ++r) {
      Element y = group.mul(x, gens[r]);
      if (seen[y]) continue;
      seen[y] = 1;
      images[y] = wreath_multiply(coefficients, images[x], hom.generator_images[r]);
      queue.push_back(y);
    }
  }
  return images;
}

bool is_homomorphism(const FiniteGroup &group, const AbelianGroup &coefficients,
                     const WreathHom &hom) {
  auto images = evaluate(group, coefficients, hom);
  for (std::size_t r = 0; r < hom.generator_images.size(); ++r)
    if (images[group.generators()[r]] != hom.generator_images[r]) return false;
  for (Element a = 0; a < group.order(); ++a)
    for (Element b = 0; b < group.order(); ++b)
      if (images[group.mul(a, b)] != wreath_multiply(coefficients, images[a], images[b]))
        return false;
  return true;
}

HomToA fold_map(const FiniteGroup &group, const AbelianGroup &coefficients, const WreathHom &hom) {
  HomToA out;
  for (const auto &x : evaluate(group, coefficients, hom)) out.values.push_back(fold(coefficients, x));
  return out;
}

std::vector<std::size_t> orbit_type_of(const WreathModel &model, const WreathHom &hom) {
  const FiniteGroup &group = model.group;
  auto images = evaluate(group, model.coefficients, hom);
  std::vector<std::size_t> multiplicities(model.class_count(), 0);
  std::vector<char> placed(hom.n, 0);
  for (std::uint32_t p = 0; p < hom.n; ++p) {
    if (placed[p]) continue;
    std::vector<Element> stabilizer;
    for (Element g = 0; g < group.order(); ++g) {
      std::uint32_t q = images[g].perm[p];
      placed[q] = 1;
      if (q == p) stabilizer.push_back(g);
    }
    bool matched = false;
    for (std::size_t i = 0; i < model.class_count() && !matched; ++i) {
      const auto &rep = model.orbit_types[i].subgroup.elements;
      if (rep.size() != stabilizer.size()) continue;
      for (Element g = 0; g < group.order() && !matched; ++g) {
        std::vector<Element> conj;
        for (Element x : rep) conj.push_back(group.conjugate(x, g));
        std::sort(conj.begin(), conj.end());
        if (conj == stabilizer) {
          ++multiplicities[i];
          matched = true;
        }
      }
    }
    if (!matched) throw Error(ErrorKind::InvalidArgument, "point stabilizer is not a subgroup");
  }
  return multiplicities;
}

BigInt uniform_below(const BigInt &bound, Rng &rng) {
  if (bound <= 0) throw Error(ErrorKind::InvalidArgument, "uniform_below: empty range");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buffer(words);
  BigInt r;
  while (true) {
    for (auto &w : buffer) w = rng();
    if (bits % 64) buffer.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
    mpz_import(r.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buffer.data());
    if (r < bound) return r;
  }
}

HomSampler::HomSampler(const WreathModel &model, std::size_t n) : model_(&model), n_(n) {
  counts_ = count_table(model, n).t;
  for (const auto &type : model.orbit_types) {
    BigInt actions = factorial(type.data.k);
    BigInt c(static_cast<unsigned long>(type.data.c));
    if (!mpz_divisible_p(actions.get_mpz_t(), c.get_mpz_t()))
      throw Error(ErrorKind::IntegralityViolation, "centralizer order does not divide k!");
    actions_per_type_.push_back(actions / c);
  }
}

std::vector<std::size_t> HomSampler::sample_orbit_type(Rng &rng) const {
  std::vector<std::size_t> m(model_->class_count(), 0);
  std::size_t s = n_;
  while (s > 0) {
    BigInt r = uniform_below(counts_[s], rng);
    bool chosen = false;
    for (std::size_t i = 0; i < model_->class_count(); ++i) {
      const auto &data = model_->orbit_types[i].data;
      if (data.k > s) continue;
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), s - 1, data.k - 1);
      BigInt weight = binom * actions_per_type_[i] * data.w * counts_[s - data.k];
      if (r < weight) {
        ++m[i];
        s -= data.k;
        chosen = true;
        break;
      }
      r -= weight;
    }
    if (!chosen)
      throw Error(ErrorKind::IntegralityViolation, "stratum weights do not sum to t_n");
  }
  return m;
}

WreathHom HomSampler::sample_hom(Rng &rng) const {
  const FiniteGroup &group = model_->group;
  const AbelianGroup &A = model_->coefficients;
  auto gens = group.generators();

  WreathHom hom;
  hom.n = n_;
  hom.generator_images.assign(gens.size(), wreath_identity(n_));
  if (n_ == 0) return hom;

  auto m = sample_orbit_type(rng);

  // A uniform labelling of the points; blocks are consecutive runs. Each
  // permutation action in the stratum is hit by exactly |centralizer| labellings.
  std::vector<std::uint32_t> points(n_);
  std::iota(points.begin(), points.end(), 0u);
  std::shuffle(points.begin(), points.end(), rng);

  std::size_t cursor = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const OrbitType &type = model_->orbit_types[i];
    const std::size_t k = type.action.degree;
    for (std::size_t copy = 0; copy < m[i]; ++copy) {
      const std::uint32_t *block = points.data() + cursor;
      cursor += k;
      const AbelianHom &u = type.local_homs[uniform_index(type.local_homs.size(), rng)];
      std::vector<AbelianGroup::Index> x(k, 0);
      for (std::size_t j = 1; j < k; ++j) x[j] = uniform_index(A.order(), rng);

      for (std::size_t r = 0; r < gens.size(); ++r) {
        const Element s = gens[r];
        auto &image = hom.generator_images[r];
        for (std::uint32_t j = 0; j < k; ++j) {
          const std::uint32_t sj = type.action.image(s, j);
          const Element t_j = type.action.transversal[j];
          const Element t_sj = type.action.transversal[sj];
          const Element local = group.mul(group.mul(group.inv(t_sj), s), t_j);
          auto contribution = apply_abelian_hom(u, type.abelianization.group, A,
                                                type.abelianization.projection[local]);
          image.perm[block[j]] = block[sj];
          image.decor[block[j]] = A.add(A.add(x[sj], contribution), A.negate(x[j]));
        }
      }
    }
  }
  return hom;
}

}  // namespace wreathhom
