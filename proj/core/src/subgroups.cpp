#include "wreathhom/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wreathhom/error.hpp"

namespace wreathhom {

namespace {

struct Candidate {
  std::vector<Element> elements;
  std::vector<Element> generators;
};

std::vector<Element> conjugate_set(const FiniteGroup &group, const std::vector<Element> &set,
                                   Element g) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (Element x : set) out.push_back(group.conjugate(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::vector<Element>, std::vector<Element>> enumerate_with_generators(
    const FiniteGroup &group) {
  std::map<std::vector<Element>, std::vector<Element>> found;
  std::vector<Candidate> cyclic;
  for (Element g = 0; g < group.order(); ++g) {
    std::vector<Element> gens;
    if (g != group.identity()) gens.push_back(g);
    auto elements = group.closure(gens);
    if (found.emplace(elements, gens).second) cyclic.push_back({elements, gens});
  }

  std::vector<Candidate> queue = cyclic;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    // Copy: `queue` may reallocate below.
    Candidate current = queue[head];
    for (const Candidate &c : cyclic) {
      if (c.generators.empty()) continue;
      Element x = c.generators.front();
      if (std::binary_search(current.elements.begin(), current.elements.end(), x)) continue;
      auto gens = current.generators;
      gens.push_back(x);
      auto joined = group.closure(gens);
      if (found.emplace(joined, gens).second) queue.push_back({std::move(joined), std::move(gens)});
    }
  }
  return found;
}

}  // namespace

bool SubgroupClass::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::vector<std::vector<Element>> all_subgroups(const FiniteGroup &group) {
  std::vector<std::vector<Element>> out;
  for (auto &[elements, gens] : enumerate_with_generators(group)) out.push_back(elements);
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup &group) {
  auto found = enumerate_with_generators(group);
  std::set<std::vector<Element>> assigned;
  std::vector<SubgroupClass> classes;
  // Map iteration is lexicographic, so the first unassigned member of a class
  // is its smallest conjugate.
  for (const auto &[elements, gens] : found) {
    if (assigned.contains(elements)) continue;
    std::set<std::vector<Element>> conjugates;
    std::size_t normalizer = 0;
    for (Element g = 0; g < group.order(); ++g) {
      auto c = conjugate_set(group, elements, g);
      if (c == elements) ++normalizer;
      conjugates.insert(std::move(c));
    }
    for (const auto &c : conjugates) assigned.insert(c);

    SubgroupClass cls;
    cls.elements = elements;
    cls.generators = gens;
    cls.index = group.order() / elements.size();
    cls.normalizer_order = normalizer;
    cls.centralizer_order = normalizer / elements.size();
    cls.class_size = conjugates.size();
    cls.is_full_group = elements.size() == group.order();
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const SubgroupClass &a, const SubgroupClass &b) {
                     if (a.order() != b.order()) return a.order() < b.order();
                     return a.elements < b.elements;
                   });
  return classes;
}

SubgroupClass full_group_class(const FiniteGroup &group) {
  SubgroupClass cls;
  cls.elements.resize(group.order());
  std::iota(cls.elements.begin(), cls.elements.end(), Element{0});
  cls.generators.assign(group.generators().begin(), group.generators().end());
  cls.index = 1;
  cls.normalizer_order = group.order();
  cls.centralizer_order = 1;
  cls.class_size = 1;
  cls.is_full_group = true;
  return cls;
}

PermutationAction coset_action(const FiniteGroup &group, const SubgroupClass &subgroup) {
  std::vector<Element> transversal;
  std::vector<char> covered(group.order(), 0);
  for (Element x = 0; x < group.order(); ++x) {
    if (covered[x]) continue;
    transversal.push_back(x);
    for (Element u : subgroup.elements) covered[group.mul(x, u)] = 1;
  }
  return coset_action(group, subgroup, transversal);
}

PermutationAction coset_action(const FiniteGroup &group, const SubgroupClass &subgroup,
                               std::span<const Element> transversal) {
  const std::size_t d = group.order();
  if (transversal.empty() || transversal.size() * subgroup.order() != d)
    throw Error(ErrorKind::InvalidArgument, "transversal has the wrong size");
  if (!subgroup.contains(transversal[0]))
    throw Error(ErrorKind::InvalidArgument, "transversal[0] must lie in the subgroup");

  PermutationAction action;
  action.degree = transversal.size();
  action.transversal.assign(transversal.begin(), transversal.end());
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  action.point_of.assign(d, kUnset);
  for (std::uint32_t j = 0; j < transversal.size(); ++j)
    for (Element u : subgroup.elements) {
      Element x = group.mul(transversal[j], u);
      if (action.point_of[x] != kUnset)
        throw Error(ErrorKind::InvalidArgument, "transversal hits a coset twice");
      action.point_of[x] = j;
    }

  action.images.assign(d, std::vector<std::uint32_t>(action.degree));
  for (Element g = 0; g < d; ++g)
    for (std::uint32_t j = 0; j < action.degree; ++j)
      action.images[g][j] = action.point_of[group.mul(g, transversal[j])];
  return action;
}

Abelianization abelianization(const FiniteGroup &group, const SubgroupClass &subgroup) {
  std::set<Element> commutators;
  for (Element a : subgroup.elements)
    for (Element b : subgroup.elements) commutators.insert(group.commutator(a, b));
  std::vector<Element> gens(commutators.begin(), commutators.end());
  Abelianization out;
  out.commutator_subgroup = group.closure(gens);

  // Cosets of [U,U] in U, numbered by their smallest member.
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coset(group.order(), kUnset);
  std::vector<Element> reps;
  for (Element x : subgroup.elements) {
    if (coset[x] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Element k : out.commutator_subgroup) coset[group.mul(x, k)] = id;
  }

  std::vector<std::vector<std::uint32_t>> table(reps.size(), std::vector<std::uint32_t>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) table[a][b] = coset[group.mul(reps[a], reps[b])];

  auto decomposition = decompose_abelian_table(table);
  out.group = std::move(decomposition.group);
  out.projection.assign(group.order(), Abelianization::kOutside);
  for (Element x : subgroup.elements) out.projection[x] = decomposition.iso[coset[x]];
  return out;
}

Abelianization abelianization(const FiniteGroup &group) {
  return abelianization(group, full_group_class(group));
}

std::size_t index_two_subgroup_count(std::span<const SubgroupClass> classes) {
  std::size_t count = 0;
  for (const auto &cls : classes)
    if (cls.index == 2) count += cls.class_size;
  return count;
}

}  // namespace wreathhom
