#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "wreathhom/bigint.hpp"
#include "wreathhom/orbit_types.hpp"
#include "wreathhom/wreath.hpp"

namespace wreathhom {

using Rng = std::mt19937_64;

/// A homomorphism G -> A wr S_n given by the images of G's generators, in
/// the order of FiniteGroup::generators().
struct WreathHom {
  std::size_t n = 0;
  std::vector<WreathElement> generator_images;
};

/// Extends the generator images along a breadth-first word table. The
/// result is only a homomorphism if is_homomorphism() holds.
std::vector<WreathElement> evaluate(const FiniteGroup &group, const AbelianGroup &coefficients,
                                    const WreathHom &hom);

/// Checks the multiplication table of G through the generated images.
bool is_homomorphism(const FiniteGroup &group, const AbelianGroup &coefficients,
                     const WreathHom &hom);

/// The fold map g -> sum of decorations of phi(g).
HomToA fold_map(const FiniteGroup &group, const AbelianGroup &coefficients, const WreathHom &hom);

/// Orbit-type multiplicities of the permutation part, recovered by
/// classifying point stabilizers up to conjugacy.
std::vector<std::size_t> orbit_type_of(const WreathModel &model, const WreathHom &hom);

/// Uniform integer in [0, bound).
BigInt uniform_below(const BigInt &bound, Rng &rng);

/// Exact uniform sampler on Hom(G, A wr S_n).
class HomSampler {
 public:
  HomSampler(const WreathModel &model, std::size_t n);

  const WreathModel &model() const noexcept { return *model_; }
  std::size_t n() const noexcept { return n_; }
  const BigInt &total() const { return counts_.back(); }

  /// Backward sampling on the recurrence: at size s, the orbit through a
  /// distinguished point has type i with probability
  /// C(s-1, k_i-1) (k_i!/c_i) w_i t_{s-k_i} / t_s.
  std::vector<std::size_t> sample_orbit_type(Rng &rng) const;

  WreathHom sample_hom(Rng &rng) const;

 private:
  const WreathModel *model_;
  std::size_t n_;
  std::vector<BigInt> counts_;           // t_0 .. t_n
  std::vector<BigInt> actions_per_type_; // k_i! / c_i
};

}  // namespace wreathhom
