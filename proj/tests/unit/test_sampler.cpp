#include <gtest/gtest.h>

#include <map>

#include "test_support.hpp"
#include "wreathhom/counting.hpp"
#include "wreathhom/oracle.hpp"
#include "wreathhom/sampler.hpp"

namespace wreathhom {
namespace {

using testing::chi_square_p_value;

// Generator images as ids of the explicit wreath product.
std::vector<std::uint64_t> key_of(const ExplicitWreath &W, const WreathHom &hom) {
  std::vector<std::uint64_t> key;
  for (const auto &x : hom.generator_images) key.push_back(W.encode(x));
  return key;
}

// Chi-square p-value of `draws` samples against the uniform law on the
// brute-force homomorphism set.
double uniformity_p_value(const WreathModel &model, std::size_t n, std::size_t draws, std::uint64_t seed) {
  ExplicitWreath W(model.coefficients, n);
  auto homs = enumerate_homs(model.group, W);
  std::map<std::vector<std::uint64_t>, std::size_t> cell;
  for (const auto &h : homs) {
    std::vector<std::uint64_t> key;
    for (Element s : model.group.generators()) key.push_back(h[s]);
    cell.emplace(key, cell.size());
  }
  EXPECT_EQ(cell.size(), homs.size());
  HomSampler sampler(model, n);
  EXPECT_EQ(sampler.total(), BigInt(std::to_string(homs.size())));
  Rng rng(seed);
  std::vector<std::uint64_t> observed(homs.size(), 0);
  for (std::size_t i = 0; i < draws; ++i) {
    auto it = cell.find(key_of(W, sampler.sample_hom(rng)));
    if (it == cell.end()) {
      ADD_FAILURE() << "sample is not a homomorphism";
      return 0.0;
    }
    ++observed[it->second];
  }
  return chi_square_p_value(observed, std::vector<double>(homs.size(), 1.0 / static_cast<double>(homs.size())));
}

TEST(Sampler, UniformOnSixHomsOfC2) {
  auto model = build_wreath_model(builtin_group("C2"), AbelianGroup({2}));
  EXPECT_GT(uniformity_p_value(model, 2, 100000, 1), 0.001);
}

TEST(Sampler, UniformOnLargerTargets) {
  EXPECT_GT(uniformity_p_value(build_wreath_model(builtin_group("S3"), AbelianGroup({2})), 3, 60000, 7), 0.001);
  EXPECT_GT(uniformity_p_value(build_wreath_model(builtin_group("V4"), AbelianGroup({3})), 3, 60000, 11), 0.001);
  EXPECT_GT(uniformity_p_value(build_wreath_model(builtin_group("C4"), AbelianGroup({2, 2})), 2, 60000, 13), 0.001);
}

TEST(Sampler, StratumFrequenciesMatchExactWeights) {
  auto model = build_wreath_model(builtin_group("S3"), AbelianGroup({2}));
  const std::size_t n = 6;
  auto list = strata(model, n);
  std::map<std::vector<std::size_t>, std::size_t> cell;
  std::vector<double> probs;
  const double total = hom_count_wreath(model, n).get_d();
  for (const auto &s : list) {
    cell.emplace(s.multiplicities, cell.size());
    probs.push_back(s.count.get_d() / total);
  }
  HomSampler sampler(model, n);
  Rng rng(3);
  std::vector<std::uint64_t> observed(list.size(), 0), observed_types(list.size(), 0);
  for (int i = 0; i < 20000; ++i) {
    auto hom = sampler.sample_hom(rng);
    ASSERT_TRUE(is_homomorphism(model.group, model.coefficients, hom));
    ++observed[cell.at(orbit_type_of(model, hom))];
    ++observed_types[cell.at(sampler.sample_orbit_type(rng))];
  }
  EXPECT_GT(chi_square_p_value(observed, probs), 0.001);
  EXPECT_GT(chi_square_p_value(observed_types, probs), 0.001);
}

TEST(Sampler, SamplesAreHomomorphismsWithMatchingFold) {
  for (const auto &name : testing::desk_groups())
    for (const auto &A : testing::desk_coefficients()) {
      auto model = build_wreath_model(builtin_group(name), A);
      HomSampler sampler(model, 9);
      Rng rng(5);
      for (int i = 0; i < 20; ++i) {
        auto hom = sampler.sample_hom(rng);
        ASSERT_EQ(hom.n, 9u);
        ASSERT_TRUE(is_homomorphism(model.group, A, hom)) << name;
        auto folded = fold_map(model.group, A, hom);
        EXPECT_TRUE(model.homs.find(folded).has_value());
        auto values = evaluate(model.group, A, hom);
        for (Element x = 0; x < model.group.order(); ++x) EXPECT_EQ(folded.values[x], fold(A, values[x]));
      }
    }
}

TEST(Sampler, DeterministicForFixedSeed) {
  auto model = build_wreath_model(builtin_group("S3"), AbelianGroup({3}));
  HomSampler sampler(model, 12);
  Rng a(99), b(99);
  for (int i = 0; i < 10; ++i) {
    auto x = sampler.sample_hom(a), y = sampler.sample_hom(b);
    ASSERT_EQ(x.generator_images, y.generator_images);
  }
}

TEST(Sampler, ZeroPointsGivesTheEmptyHom) {
  auto model = build_wreath_model(builtin_group("C3"), AbelianGroup({2}));
  HomSampler sampler(model, 0);
  Rng rng(1);
  auto hom = sampler.sample_hom(rng);
  EXPECT_EQ(hom.n, 0u);
  EXPECT_TRUE(is_homomorphism(model.group, model.coefficients, hom));
  EXPECT_TRUE(sampler.sample_orbit_type(rng) == std::vector<std::size_t>(model.class_count(), 0));
}

TEST(Sampler, RejectsNonHomomorphisms) {
  auto g = builtin_group("C2");
  AbelianGroup A({2});
  WreathHom bad{2, {WreathElement{{1, 0}, {1, 0}}}};
  // (12; 1, 0) squares to (e; 1, 1), not the identity.
  EXPECT_FALSE(is_homomorphism(g, A, bad));
  WreathHom good{2, {WreathElement{{1, 0}, {1, 1}}}};
  EXPECT_TRUE(is_homomorphism(g, A, good));
}

TEST(Sampler, TrivialGroupUsesOnlyFixedPoints) {
  auto model = build_wreath_model(builtin_group("C1"), AbelianGroup({2, 2}));
  HomSampler sampler(model, 5);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sampler.sample_orbit_type(rng), std::vector<std::size_t>{5});
  auto hom = sampler.sample_hom(rng);
  EXPECT_TRUE(hom.generator_images.empty());
}

TEST(Sampler, C2StrataAtThree) {
  auto model = build_wreath_model(builtin_group("C2"), AbelianGroup({2}));
  HomSampler sampler(model, 3);
  Rng rng(8);
  std::vector<std::uint64_t> observed(2, 0);
  for (int i = 0; i < 100000; ++i) {
    auto m = sampler.sample_orbit_type(rng);
    if (m == std::vector<std::size_t>{1, 1}) ++observed[0];
    else if (m == std::vector<std::size_t>{0, 3}) ++observed[1];
    else FAIL() << "impossible stratum";
  }
  EXPECT_GT(chi_square_p_value(observed, {12.0 / 20, 8.0 / 20}), 0.001);
}

TEST(Sampler, FoldLawMatchesExactDistribution) {
  for (const auto &[name, n] : std::vector<std::pair<std::string, std::size_t>>{{"C2", 4}, {"V4", 5}, {"S3", 4}}) {
    auto model = build_wreath_model(builtin_group(name), AbelianGroup({2}));
    auto exact = delta_distribution(model, n);
    std::vector<double> probs;
    for (const auto &p : exact.probs) probs.push_back(p.get_d());
    HomSampler sampler(model, n);
    Rng rng(31);
    const int draws = 100000;
    std::vector<std::uint64_t> observed(model.homs.size(), 0);
    for (int i = 0; i < draws; ++i)
      ++observed[model.homs.index_of(fold_map(model.group, model.coefficients, sampler.sample_hom(rng)))];
    EXPECT_GT(chi_square_p_value(observed, probs), 0.001) << name;
    if (name == "C2") {
      const double p = 44.0 / 76.0;
      EXPECT_NEAR(static_cast<double>(observed[0]) / draws, p, 5 * std::sqrt(p * (1 - p) / draws));
    }
  }
}

TEST(UniformBelow, SmallBoundIsUniform) {
  Rng rng(17);
  std::vector<std::uint64_t> observed(7, 0);
  for (int i = 0; i < 70000; ++i) {
    BigInt x = uniform_below(7, rng);
    ASSERT_TRUE(x >= 0 && x < 7);
    ++observed[x.get_ui()];
  }
  EXPECT_GT(chi_square_p_value(observed, std::vector<double>(7, 1.0 / 7)), 0.001);
}

TEST(UniformBelow, LargeBoundHasTheRightMean) {
  Rng rng(23);
  BigInt bound = BigInt(1) << 200;
  bound += 12345;
  const int draws = 20000;
  double mean = 0.0;
  for (int i = 0; i < draws; ++i) {
    BigInt x = uniform_below(bound, rng);
    ASSERT_TRUE(x >= 0 && x < bound);
    mean += Rational(x, bound).get_d();
  }
  mean /= draws;
  // Standard error of a uniform(0,1) mean is 1/sqrt(12 draws).
  EXPECT_NEAR(mean, 0.5, 5.0 / std::sqrt(12.0 * draws));
  EXPECT_EQ(uniform_below(1, rng), 0);
}

}  // namespace
}  // namespace wreathhom
