#include "wreathhom/counting.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <string>

#include "wreathhom/error.hpp"

namespace wreathhom {

namespace {

void check_cap(std::size_t n, std::size_t cap, const char *what) {
  if (n > cap)
    throw Error(ErrorKind::CapExceeded, std::string(what) + ": n = " + std::to_string(n) +
                                            " exceeds the cap " + std::to_string(cap));
}

BigInt exact_divide(const BigInt &numerator, const BigInt &denominator, std::size_t n) {
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw Error(ErrorKind::IntegralityViolation,
                "recurrence produced a non-integer count at n = " + std::to_string(n));
  BigInt out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return out;
}

// Integer form of the recurrence. With L = lcm(c_i),
//   L t_n = sum_i (L/c_i) k_i w_i (n-1)_{k_i-1} t_{n-k_i}.
// Only the last max(k_i) values are retained.
class ScalarRecurrence {
 public:
  ScalarRecurrence(const WreathModel &model, bool include_full_group) {
    for (const auto &type : model.orbit_types) {
      if (type.subgroup.is_full_group && !include_full_group) continue;
      terms_.push_back({type.data.k, type.data.c, type.data.w, 0});
    }
    lcm_ = 1;
    for (const auto &t : terms_) lcm_ = std::lcm(lcm_, t.c);
    for (auto &t : terms_) {
      t.base = t.w * static_cast<unsigned long>(t.k) * static_cast<unsigned long>(lcm_ / t.c);
      window_size_ = std::max(window_size_, t.k);
    }
    history_.push_front(1);  // t_0
  }

  std::size_t n() const noexcept { return n_; }
  const BigInt &current() const { return history_.front(); }

  const BigInt &advance() {
    ++n_;
    BigInt sum = 0;
    for (const auto &t : terms_) {
      if (t.k > n_) continue;
      sum += t.base * falling_factorial(n_ - 1, t.k - 1) * history_[t.k - 1];
    }
    history_.push_front(exact_divide(sum, BigInt(static_cast<unsigned long>(lcm_)), n_));
    if (history_.size() > window_size_) history_.pop_back();
    return history_.front();
  }

 private:
  struct Term {
    std::size_t k;
    std::size_t c;
    BigInt w;
    BigInt base;
  };
  std::vector<Term> terms_;
  std::size_t lcm_ = 1;
  std::size_t window_size_ = 1;
  std::size_t n_ = 0;
  std::deque<BigInt> history_;  // history_[j] = t_{n-j}
};

// Group-algebra version over Hom(G, A): N_i replaces w_i and products become
// convolutions.
std::vector<std::vector<BigInt>> fiber_series(const WreathModel &model, std::size_t n_max) {
  const std::size_t h = model.homs.size();
  std::size_t lcm = 1;
  for (const auto &type : model.orbit_types) lcm = std::lcm(lcm, type.data.c);

  struct Term {
    std::size_t k;
    BigInt scale;  // (L/c) k
    std::vector<std::pair<std::size_t, BigInt>> support;
  };
  std::vector<Term> terms;
  for (const auto &type : model.orbit_types) {
    Term t{type.data.k, BigInt(static_cast<unsigned long>((lcm / type.data.c) * type.data.k)), {}};
    for (std::size_t psi = 0; psi < h; ++psi)
      if (type.data.N[psi] != 0) t.support.emplace_back(psi, type.data.N[psi]);
    terms.push_back(std::move(t));
  }

  std::vector<std::vector<BigInt>> series(n_max + 1, std::vector<BigInt>(h, 0));
  series[0][0] = 1;
  const BigInt divisor(static_cast<unsigned long>(lcm));
  std::vector<BigInt> acc(h), conv(h);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto &t : terms) {
      if (t.k > n) continue;
      const auto &prev = series[n - t.k];
      std::fill(conv.begin(), conv.end(), 0);
      for (const auto &[psi1, weight] : t.support)
        for (std::size_t psi2 = 0; psi2 < h; ++psi2)
          if (prev[psi2] != 0) conv[model.homs.add(psi1, psi2)] += weight * prev[psi2];
      BigInt factor = t.scale * falling_factorial(n - 1, t.k - 1);
      for (std::size_t psi = 0; psi < h; ++psi) acc[psi] += factor * conv[psi];
    }
    for (std::size_t psi = 0; psi < h; ++psi) series[n][psi] = exact_divide(acc[psi], divisor, n);
  }
  return series;
}

void enumerate_strata(const WreathModel &model, std::size_t n, std::size_t cls,
                      std::size_t remaining, std::vector<std::size_t> &m,
                      std::vector<Stratum> &out) {
  if (cls == model.class_count()) {
    if (remaining != 0) return;
    Rational term = Rational(factorial(n));
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto &data = model.orbit_types[i].data;
      BigInt w_pow, c_pow;
      mpz_pow_ui(w_pow.get_mpz_t(), data.w.get_mpz_t(), m[i]);
      mpz_ui_pow_ui(c_pow.get_mpz_t(), data.c, m[i]);
      term *= Rational(w_pow, factorial(m[i]) * c_pow);
    }
    term.canonicalize();
    if (!is_integer(term))
      throw Error(ErrorKind::IntegralityViolation, "stratum count is not an integer");
    out.push_back({m, BigInt(term.get_num())});
    return;
  }
  const std::size_t k = model.orbit_types[cls].data.k;
  for (std::size_t mi = 0; mi * k <= remaining; ++mi) {
    m[cls] = mi;
    enumerate_strata(model, n, cls + 1, remaining - mi * k, m, out);
  }
  m[cls] = 0;
}

}  // namespace

DistributionTable distribution_from_fibers(std::size_t n, std::vector<BigInt> fibers) {
  DistributionTable table;
  table.n = n;
  BigInt total = 0;
  for (const auto &f : fibers) total += f;
  if (total == 0) throw Error(ErrorKind::InvalidArgument, "distribution with zero total mass");
  for (const auto &f : fibers) {
    Rational p(f, total);
    p.canonicalize();
    table.probs.push_back(std::move(p));
  }
  table.fiber_counts = std::move(fibers);
  return table;
}

BigInt DistributionTable::total() const {
  BigInt sum = 0;
  for (const auto &f : fiber_counts) sum += f;
  return sum;
}

std::vector<Stratum> strata(const WreathModel &model, std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error(ErrorKind::CapExceeded,
                "direct enumeration is capped at n = " + std::to_string(cap) + " (got " +
                    std::to_string(n) + "); use hom_count_wreath instead");
  std::vector<Stratum> out;
  std::vector<std::size_t> m(model.class_count(), 0);
  enumerate_strata(model, n, 0, n, m, out);
  return out;
}

BigInt hom_count_direct(const WreathModel &model, std::size_t n, std::size_t cap) {
  BigInt total = 0;
  for (const auto &s : strata(model, n, cap)) total += s.count;
  return total;
}

BigInt hom_count_wreath(const WreathModel &model, std::size_t n, std::size_t cap) {
  check_cap(n, cap, "hom_count_wreath");
  ScalarRecurrence rec(model, true);
  while (rec.n() < n) rec.advance();
  return rec.current();
}

CountTable count_table(const WreathModel &model, std::size_t n_max, std::size_t cap) {
  check_cap(n_max, cap, "count_table");
  CountTable table;
  table.n_max = n_max;
  for (const auto &type : model.orbit_types) {
    Rational a(type.data.w, BigInt(static_cast<unsigned long>(type.data.c)));
    a.canonicalize();
    table.class_weights.push_back(a);
  }
  ScalarRecurrence rec(model, true);
  table.t.push_back(rec.current());
  while (rec.n() < n_max) table.t.push_back(rec.advance());
  return table;
}

BigInt fixed_point_free_count(const WreathModel &model, std::size_t n) {
  check_cap(n, kRecurrenceCap, "fixed_point_free_count");
  ScalarRecurrence rec(model, false);
  while (rec.n() < n) rec.advance();
  return rec.current();
}

Rational fixed_point_free_probability(const WreathModel &model, std::size_t n) {
  Rational p(fixed_point_free_count(model, n), hom_count_wreath(model, n));
  p.canonicalize();
  return p;
}

std::vector<Rational> fixed_point_free_probabilities(const WreathModel &model, std::size_t n_max) {
  check_cap(n_max, kRecurrenceCap, "fixed_point_free_probabilities");
  ScalarRecurrence all(model, true), free(model, false);
  std::vector<Rational> out{Rational(1)};
  while (all.n() < n_max) {
    Rational p(free.advance(), all.advance());
    p.canonicalize();
    out.push_back(p);
  }
  return out;
}

DistributionTable delta_distribution(const WreathModel &model, std::size_t n) {
  check_cap(n, kRecurrenceCap, "delta_distribution");
  auto series = fiber_series(model, n);
  return distribution_from_fibers(n, std::move(series[n]));
}

std::vector<DistributionTable> delta_series(const WreathModel &model, std::size_t n_max) {
  check_cap(n_max, kRecurrenceCap, "delta_series");
  auto series = fiber_series(model, n_max);
  std::vector<DistributionTable> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(distribution_from_fibers(n, std::move(series[n])));
  return out;
}

Rational sup_distance_to_uniform(const DistributionTable &table) {
  Rational uniform(1, static_cast<unsigned long>(table.probs.size()));
  Rational best = 0;
  for (const auto &p : table.probs) best = std::max(best, Rational(abs(p - uniform)));
  return best;
}

BigInt weyl_hom_count(const WreathModel &model, std::size_t n) {
  if (model.coefficients != AbelianGroup({2}))
    throw Error(ErrorKind::InvalidArgument, "weyl_hom_count needs coefficient group C2");
  return delta_distribution(model, n).fiber_counts[0];
}

BigInt weyl_hom_count(const FiniteGroup &group, std::size_t n) {
  return weyl_hom_count(build_wreath_model(group, AbelianGroup({2})), n);
}

DecayConstant decay_constant(const WreathModel &model) {
  std::uint64_t max_local = 1;
  for (const auto &type : model.orbit_types)
    max_local = std::max(max_local, hom_count_abelian(type.abelianization.group, model.coefficients));
  BigInt scale = BigInt(static_cast<unsigned long>(model.group.order())) *
                 static_cast<unsigned long>(model.class_count()) *
                 BigInt(std::to_string(model.coefficients.order())) * BigInt(std::to_string(max_local));
  DecayConstant out;
  out.conservative = Rational(1, scale * 3);
  out.conservative.canonicalize();
  out.value = 1.0 / (std::numbers::e * scale.get_d());
  return out;
}

DecayFit fit_decay(const WreathModel &model, std::size_t n_lo, std::size_t n_hi) {
  if (n_lo > n_hi) throw Error(ErrorKind::InvalidArgument, "fit_decay: empty range");
  auto probs = fixed_point_free_probabilities(model, n_hi);
  const double exponent = 1.0 / static_cast<double>(model.group.order());
  std::vector<double> xs, ys;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    if (probs[n] <= 0) continue;
    xs.push_back(std::pow(static_cast<double>(n), exponent));
    ys.push_back(log_of(probs[n]));
  }
  DecayFit fit;
  fit.points = xs.size();
  if (xs.size() < 2) return fit;
  const double count = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / count;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

}  // namespace wreathhom
