// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "wreathhom/counting.hpp"
#include "wreathhom/error.hpp"
#include "wreathhom/oracle.hpp"
#include "wreathhom/sampler.hpp"

using namespace wreathhom;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Case {
  std::string group;
  AbelianGroup A;
  std::size_t n;
};

std::vector<Case> oracle_suite() {
  std::vector<Case> out;
  for (const auto &g : testing::desk_groups())
    for (const auto &A : testing::desk_coefficients())
      for (std::size_t n = 1; n <= 4; ++n) {
        double size = 1;
        for (std::size_t i = 1; i <= n; ++i) size *= static_cast<double>(i * A.order());
        if (n == 4 && size > 1e6) continue;
        out.push_back({g, A, n});
      }
  return out;
}

std::string label(const Case &c) {
  std::ostringstream os;
  os << c.group << " A=[";
  for (std::size_t i = 0; i < c.A.rank(); ++i) os << (i ? "," : "") << c.A.invariant_factors()[i];
  os << "] n=" << c.n;
  return os.str();
}

const WreathModel &model_for(const std::string &group, const AbelianGroup &A) {
  static std::map<std::pair<std::string, std::vector<std::uint64_t>>, WreathModel> cache;
  auto key = std::make_pair(group, A.invariant_factors());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_wreath_model(builtin_group(group), A)).first;
  return it->second;
}

Outcome count_equivalence() {
  std::size_t cases = 0;
  for (const auto &c : oracle_suite()) {
    const auto &model = model_for(c.group, c.A);
    ExplicitWreath W(c.A, c.n);
    BigInt brute(std::to_string(enumerate_homs(model.group, W).size()));
    BigInt direct = hom_count_direct(model, c.n);
    BigInt wreath = hom_count_wreath(model, c.n);
    if (brute != direct || direct != wreath)
      return {false, label(c) + ": enumerate " + to_decimal(brute) + ", direct " + to_decimal(direct) +
                         ", recurrence " + to_decimal(wreath)};
    ++cases;
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome distribution_equivalence() {
  std::size_t cases = 0;
  for (const auto &c : oracle_suite()) {
    const auto &model = model_for(c.group, c.A);
    if (delta_distribution(model, c.n).fiber_counts != oracle_delta(model, c.n).fiber_counts)
      return {false, label(c) + ": fiber counts differ"};
    ++cases;
  }
  const auto &c2 = model_for("C2", AbelianGroup({2}));
  const std::vector<BigInt> pin2{4, 2}, pin3{10, 10};
  if (delta_distribution(c2, 2).fiber_counts != pin2 || oracle_delta(c2, 2).fiber_counts != pin2)
    return {false, "C2 A=[2] n=2 is not (4, 2)"};
  if (delta_distribution(c2, 3).fiber_counts != pin3 || oracle_delta(c2, 3).fiber_counts != pin3)
    return {false, "C2 A=[2] n=3 is not (10, 10)"};
  return {true, std::to_string(cases) + " cases, pinned (4,2) and (10,10)"};
}

Outcome stratified_fibers() {
  std::size_t strata = 0;
  for (const auto &c : oracle_suite()) {
    const auto &model = model_for(c.group, c.A);
    for (const auto &s : oracle_strata(model, c.n)) {
      if (!s.has_fixed_point) continue;
      for (auto f : s.fibers)
        if (f != s.fibers[0]) return {false, label(c) + ": unequal fibers in a fixed-point stratum"};
      ++strata;
    }
  }
  return {true, std::to_string(strata) + " fixed-point strata, 0 exceptions"};
}

Outcome theorem_inequality() {
  const auto &model = model_for("C2", AbelianGroup({2}));
  const std::size_t n_max = 300;
  auto series = delta_series(model, n_max);
  auto probs = fixed_point_free_probabilities(model, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (sup_distance_to_uniform(series[n]) > probs[n])
      return {false, "n=" + std::to_string(n) + ": distance exceeds p_n"};
    if (n % 2 == 1 && probs[n] != 0) return {false, "n=" + std::to_string(n) + ": odd n with p_n > 0"};
  }
  if (!(probs[n_max] < Rational(1, 1000000))) return {false, "p_300 >= 1e-6"};
  char buf[64];
  std::snprintf(buf, sizeof buf, "p_300 = %.3e", std::exp(log_of(probs[n_max])));
  return {true, buf};
}

Outcome decay_shape() {
  const auto &model = model_for("C2", AbelianGroup({2}));
  auto fit = fit_decay(model, 50, 300);
  auto constant = decay_constant(model);
  char buf[160];
  std::snprintf(buf, sizeof buf, "slope %.5f over %zu even n, constant 1/(16e) = %.5f", fit.slope, fit.points,
                constant.value);
  bool ok = fit.slope < 0 && fit.points == 126 &&
            std::abs(constant.value - 1.0 / (16.0 * std::numbers::e)) < 1e-15;
  return {ok, buf};
}

Outcome corollary() {
  const std::size_t n_max = 300;
  for (const auto &name : {"C2", "V4", "S3"}) {
    const auto &model = model_for(name, AbelianGroup({2}));
    const std::size_t via_subgroups = 1 + index_two_subgroup_count(subgroup_classes(model.group));
    const std::size_t via_homs = testing::brute_force_abelian_hom_count(model.group, AbelianGroup({2}));
    if (via_subgroups != via_homs || via_homs != model.homs.size())
      return {false, std::string(name) + ": 1 + s2 disagrees between methods"};
    const Rational limit(1, static_cast<unsigned long>(via_homs));
    auto series = delta_series(model, n_max);
    auto probs = fixed_point_free_probabilities(model, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      BigInt weyl = weyl_hom_count(model, n);
      if (weyl != series[n].fiber_counts[0]) return {false, std::string(name) + ": Weyl count mismatch"};
      Rational ratio(weyl, hom_count_wreath(model, n));
      ratio.canonicalize();
      if (abs(ratio - limit) > probs[n])
        return {false, std::string(name) + " n=" + std::to_string(n) + ": ratio too far from limit"};
    }
  }
  const auto &c2 = model_for("C2", AbelianGroup({2}));
  Rational r2(weyl_hom_count(c2, 2), hom_count_wreath(c2, 2));
  Rational r3(weyl_hom_count(c2, 3), hom_count_wreath(c2, 3));
  r2.canonicalize();
  r3.canonicalize();
  if (weyl_hom_count(c2, 2) != 4 || hom_count_wreath(c2, 2) != 6 || r2 != Rational(2, 3))
    return {false, "C2 n=2 ratio is not 4/6"};
  if (weyl_hom_count(c2, 3) != 10 || hom_count_wreath(c2, 3) != 20 || r3 != Rational(1, 2))
    return {false, "C2 n=3 ratio is not 10/20"};
  return {true, "C2, V4, S3 up to n=300, pinned 4/6 and 10/20"};
}

Outcome integrality() {
  std::size_t models = 0;
  for (const auto &g : testing::desk_groups())
    for (const auto &A : testing::desk_coefficients()) {
      const auto &model = model_for(g, A);
      CountTable table;
      try {
        table = count_table(model, 300);
      } catch (const Error &e) {
        return {false, g + ": " + e.what()};
      }
      // Rational form of the recurrence, n h_n = sum_i k_i (w_i / c_i) h_{n - k_i}.
      std::vector<Rational> h{Rational(1)};
      for (std::size_t n = 1; n <= 120; ++n) {
        Rational sum = 0;
        for (const auto &t : model.orbit_types)
          if (t.data.k <= n)
            sum += Rational(static_cast<unsigned long>(t.data.k)) * Rational(t.data.w, static_cast<unsigned long>(t.data.c)) *
                   h[n - t.data.k];
        sum /= Rational(static_cast<unsigned long>(n));
        h.push_back(sum);
        Rational scaled = sum * Rational(factorial(n));
        if (!is_integer(scaled) || scaled.get_num() != table.t[n])
          return {false, g + " n=" + std::to_string(n) + ": n! h_n is not the integer count"};
      }
      ++models;
    }
  return {true, std::to_string(models) + " models, n <= 300 in integer form, n <= 120 cross-checked in rationals"};
}

Outcome centralizer_identity() {
  std::size_t classes = 0;
  std::vector<std::string> groups = testing::desk_groups();
  groups.push_back("D4");
  groups.push_back("Q8");
  for (const auto &name : groups) {
    auto g = builtin_group(name);
    for (const auto &cls : subgroup_classes(g)) {
      auto c = centralizer_order(coset_action(g, cls));
      if (c != cls.normalizer_order / cls.order()) return {false, name + ": centralizer differs from |N(U)|/|U|"};
      ++classes;
    }
  }
  return {true, std::to_string(classes) + " subgroup classes"};
}

Outcome sampler_statistics() {
  const auto &model = model_for("C2", AbelianGroup({2}));
  const std::size_t n = 2, draws = 100000;
  ExplicitWreath W(model.coefficients, n);
  auto homs = enumerate_homs(model.group, W);
  if (homs.size() != 6) return {false, "expected 6 homomorphisms"};
  const Element gen = model.group.generators()[0];
  std::map<std::uint64_t, std::size_t> cell;
  for (const auto &h : homs) cell.emplace(h[gen], cell.size());
  HomSampler sampler(model, n);
  Rng rng(20240601);
  std::vector<std::uint64_t> observed(6, 0), strata(2, 0);
  for (std::size_t i = 0; i < draws; ++i) {
    auto hom = sampler.sample_hom(rng);
    auto it = cell.find(W.encode(hom.generator_images[0]));
    if (it == cell.end()) return {false, "sample is not a homomorphism"};
    ++observed[it->second];
    // Type index 0 is the regular orbit: one orbit of size 2, no fixed point.
    ++strata[orbit_type_of(model, hom)[0] == 1 ? 0 : 1];
  }
  double p_uniform = testing::chi_square_p_value(observed, std::vector<double>(6, 1.0 / 6));
  double p_strata = testing::chi_square_p_value(strata, {1.0 / 3, 2.0 / 3});
  double freq = static_cast<double>(strata[0]) / draws;
  double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / draws);
  char buf[160];
  std::snprintf(buf, sizeof buf, "chi-square p = %.4f, strata (%.4f, %.4f) p = %.4f", p_uniform, freq, 1 - freq,
                p_strata);
  return {p_uniform > 0.001 && p_strata > 0.001 && std::abs(freq - 1.0 / 3) < 5 * sigma, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle count equivalence", count_equivalence},
      {"distribution equivalence", distribution_equivalence},
      {"stratified fiber equality", stratified_fibers},
      {"distance to uniform bounded by p_n", theorem_inequality},
      {"decay shape", decay_shape},
      {"Weyl group ratio", corollary},
      {"recurrence integrality", integrality},
      {"centralizer identity", centralizer_identity},
      {"sampler statistics", sampler_statistics},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    std::printf("%s %zu %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.detail.c_str(), secs);
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
