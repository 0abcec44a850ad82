#pragma once

#include <cstddef>
#include <vector>

#include "wreathhom/bigint.hpp"
#include "wreathhom/orbit_types.hpp"

namespace wreathhom {

inline constexpr std::size_t kDirectEnumerationCap = 60;
inline constexpr std::size_t kRecurrenceCap = 100000;

struct CountTable {
  std::size_t n_max = 0;
  std::vector<BigInt> t;                // t[n] = |Hom(G, A wr S_n)|
  std::vector<Rational> class_weights;  // w_i / c_i per orbit type
};

/// The image of the uniform distribution on Hom(G, A wr S_n) under the fold
/// map, indexed like the model's HomGroup.
struct DistributionTable {
  std::size_t n = 0;
  std::vector<BigInt> fiber_counts;
  std::vector<Rational> probs;

  BigInt total() const;
};

/// Normalizes fiber counts into exact probabilities.
DistributionTable distribution_from_fibers(std::size_t n, std::vector<BigInt> fibers);

/// One summand of the stratified count: orbit-type multiplicities m and the
/// number of homomorphisms realizing them,
/// n! prod_i w_i^{m_i} / (m_i! c_i^{m_i}).
struct Stratum {
  std::vector<std::size_t> multiplicities;
  BigInt count;
};

/// All strata with sum_i m_i k_i = n, in lexicographic order of m.
std::vector<Stratum> strata(const WreathModel &model, std::size_t n,
                            std::size_t cap = kDirectEnumerationCap);

/// Sum over strata. Throws CapExceeded above `cap`; use hom_count_wreath.
BigInt hom_count_direct(const WreathModel &model, std::size_t n,
                        std::size_t cap = kDirectEnumerationCap);

/// Exponential-generating-function recurrence
///   n h_n = sum_i k_i (w_i / c_i) h_{n-k_i},  t_n = n! h_n,
/// evaluated in integer form. Integrality is checked at every step.
BigInt hom_count_wreath(const WreathModel &model, std::size_t n,
                        std::size_t cap = kRecurrenceCap);

CountTable count_table(const WreathModel &model, std::size_t n_max,
                       std::size_t cap = kRecurrenceCap);

/// Number of homomorphisms whose permutation image has no fixed point.
BigInt fixed_point_free_count(const WreathModel &model, std::size_t n);
Rational fixed_point_free_probability(const WreathModel &model, std::size_t n);
/// p_0 .. p_{n_max}.
std::vector<Rational> fixed_point_free_probabilities(const WreathModel &model, std::size_t n_max);

DistributionTable delta_distribution(const WreathModel &model, std::size_t n);
/// delta_0 .. delta_{n_max}.
std::vector<DistributionTable> delta_series(const WreathModel &model, std::size_t n_max);

/// Sup-norm distance between the table's probabilities and the uniform law.
Rational sup_distance_to_uniform(const DistributionTable &table);

/// |Hom(G, W_n)| for the type-D Weyl group W_n inside C2 wr S_n.
BigInt weyl_hom_count(const FiniteGroup &group, std::size_t n);
/// Same, reusing a model whose coefficient group must be C2.
BigInt weyl_hom_count(const WreathModel &model, std::size_t n);

struct DecayConstant {
  /// 1 / (3 d l |A| max_i |Hom(U_i, A)|), strictly below the real constant.
  Rational conservative;
  /// 1 / (e d l |A| max_i |Hom(U_i, A)|).
  double value = 0.0;
};

DecayConstant decay_constant(const WreathModel &model);

/// Least-squares fit of log p_n against n^(1/d) over the n in [n_lo, n_hi]
/// with p_n > 0.
struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

DecayFit fit_decay(const WreathModel &model, std::size_t n_lo, std::size_t n_hi);

}  // namespace wreathhom
