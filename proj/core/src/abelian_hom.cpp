#include "wreathhom/abelian_hom.hpp"

#include <algorithm>
#include <numeric>

#include "wreathhom/error.hpp"

namespace wreathhom {

std::uint64_t hom_count_abelian(const AbelianGroup &source, const AbelianGroup &target) {
  std::uint64_t count = 1;
  for (std::uint64_t b : source.invariant_factors())
    for (std::uint64_t a : target.invariant_factors())
      if (__builtin_mul_overflow(count, std::gcd(a, b), &count))
        throw Error(ErrorKind::CapExceeded, "|Hom(B, A)| overflows 64 bits");
  return count;
}

std::vector<AbelianHom> enumerate_abelian_homs(const AbelianGroup &source,
                                               const AbelianGroup &target) {
  // Admissible images of each source generator: b * y = 0 in the target.
  std::vector<std::vector<AbelianGroup::Index>> choices;
  for (std::uint64_t b : source.invariant_factors()) {
    std::vector<AbelianGroup::Index> ok;
    for (AbelianGroup::Index y = 0; y < target.order(); ++y)
      if (target.scale(y, b) == 0) ok.push_back(y);
    choices.push_back(std::move(ok));
  }

  std::vector<AbelianHom> out;
  AbelianHom current(choices.size());
  auto recurse = [&](auto &&self, std::size_t depth) -> void {
    if (depth == choices.size()) {
      out.push_back(current);
      return;
    }
    for (auto y : choices[depth]) {
      current[depth] = y;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

AbelianGroup::Index apply_abelian_hom(const AbelianHom &hom, const AbelianGroup &source,
                                      const AbelianGroup &target, AbelianGroup::Index x) {
  auto c = source.coords(x);
  AbelianGroup::Index out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) out = target.add(out, target.scale(hom[i], c[i]));
  return out;
}

bool is_homomorphism(const FiniteGroup &group, const AbelianGroup &target, const HomToA &hom) {
  if (hom.values.size() != group.order()) return false;
  for (Element a = 0; a < group.order(); ++a) {
    if (hom.values[a] >= target.order()) return false;
    for (Element b = 0; b < group.order(); ++b)
      if (hom.values[group.mul(a, b)] != target.add(hom.values[a], hom.values[b])) return false;
  }
  return true;
}

HomGroup::HomGroup(AbelianGroup target, std::vector<HomToA> elements)
    : target_(std::move(target)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(elements_[i], i);
  if (lookup_.size() != elements_.size())
    throw Error(ErrorKind::InvalidArgument, "duplicate homomorphisms in HomGroup");

  const std::size_t h = elements_.size();
  add_.assign(h * h, 0);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b) {
      HomToA sum;
      sum.values.resize(elements_[a].values.size());
      for (std::size_t g = 0; g < sum.values.size(); ++g)
        sum.values[g] = target_.add(elements_[a].values[g], elements_[b].values[g]);
      add_[a * h + b] = index_of(sum);
    }
}

std::optional<std::size_t> HomGroup::find(const HomToA &hom) const {
  auto it = lookup_.find(hom);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t HomGroup::index_of(const HomToA &hom) const {
  auto idx = find(hom);
  if (!idx) throw Error(ErrorKind::InvalidArgument, "map is not an element of Hom(G, A)");
  return *idx;
}

HomGroup hom_group(const FiniteGroup &group, const AbelianGroup &target) {
  Abelianization ab = abelianization(group);
  std::vector<HomToA> elements;
  for (const AbelianHom &u : enumerate_abelian_homs(ab.group, target)) {
    HomToA hom;
    hom.values.resize(group.order());
    for (Element g = 0; g < group.order(); ++g)
      hom.values[g] = apply_abelian_hom(u, ab.group, target, ab.projection[g]);
    elements.push_back(std::move(hom));
  }
  return HomGroup(target, std::move(elements));
}

}  // namespace wreathhom
