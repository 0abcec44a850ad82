#include "wreathhom/finite_group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "wreathhom/error.hpp"

namespace wreathhom {

namespace {

using Perm = std::vector<std::uint32_t>;

std::string cycle_notation(const Perm &p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = p[x];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm to_perm(const std::vector<std::int64_t> &images, std::size_t degree, std::size_t which) {
  if (images.size() != degree)
    throw Error(ErrorKind::InvalidPermutation,
                "generator " + std::to_string(which) + " has degree " +
                    std::to_string(images.size()) + ", expected " + std::to_string(degree));
  Perm p(degree);
  std::vector<bool> hit(degree, false);
  for (std::size_t i = 0; i < degree; ++i) {
    std::int64_t v = images[i];
    if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[v])
      throw Error(ErrorKind::InvalidPermutation,
                  "generator " + std::to_string(which) + " is not a permutation of 0.." +
                      std::to_string(degree - 1));
    hit[v] = true;
    p[i] = static_cast<std::uint32_t>(v);
  }
  return p;
}

Perm compose(const Perm &g, const Perm &h) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[h[i]];
  return out;
}

}  // namespace

Element FiniteGroup::power(Element x, std::uint64_t exponent) const noexcept {
  Element result = identity();
  Element base = x;
  while (exponent) {
    if (exponent & 1u) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1u;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element x) const noexcept {
  std::size_t n = 1;
  for (Element y = x; y != identity(); y = mul(y, x)) ++n;
  return n;
}

std::vector<Element> FiniteGroup::closure(std::span<const Element> gens) const {
  std::vector<char> member(order_, 0);
  std::vector<Element> out{identity()};
  member[identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element g : gens) {
      Element y = mul(out[i], g);
      if (!member[y]) {
        member[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void FiniteGroup::finish(std::vector<Element> generators) {
  inverse_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (mul(a, b) == identity()) {
        inverse_[a] = b;
        break;
      }

  if (generators.empty() && order_ > 1) {
    // Greedy generating set: keep any element not yet in the span.
    std::vector<char> member(order_, 0);
    member[identity()] = 1;
    for (Element g = 1; g < order_; ++g) {
      if (member[g]) continue;
      generators.push_back(g);
      for (Element x : closure(generators)) member[x] = 1;
    }
  }
  generators_ = std::move(generators);

  if (names_.empty()) {
    names_.resize(order_);
    for (Element a = 0; a < order_; ++a) names_[a] = std::to_string(a);
  }
}

FiniteGroup FiniteGroup::from_table(std::string name,
                                    const std::vector<std::vector<std::int64_t>> &table,
                                    std::size_t cap) {
  const std::size_t d = table.size();
  if (d == 0) throw Error(ErrorKind::MalformedTable, "empty multiplication table");
  if (d > cap)
    throw Error(ErrorKind::CapExceeded, "table of order " + std::to_string(d) +
                                            " exceeds the element cap " + std::to_string(cap));
  for (std::size_t r = 0; r < d; ++r) {
    if (table[r].size() != d)
      throw Error(ErrorKind::MalformedTable,
                  "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                      " entries, expected " + std::to_string(d));
    for (std::int64_t v : table[r])
      if (v < 0 || static_cast<std::size_t>(v) >= d)
        throw Error(ErrorKind::MalformedTable,
                    "entry " + std::to_string(v) + " in row " + std::to_string(r) +
                        " is out of range");
  }

  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < d && !e; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < d && ok; ++x)
      ok = table[c][x] == static_cast<std::int64_t>(x) &&
           table[x][c] == static_cast<std::int64_t>(x);
    if (ok) e = c;
  }
  if (!e) throw Error(ErrorKind::NoIdentity, "no identity element");

  // Relabel so the identity is element 0.
  std::vector<Element> relabel(d);
  std::iota(relabel.begin(), relabel.end(), 0u);
  std::swap(relabel[0], relabel[*e]);

  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = d;
  g.table_.assign(d * d, 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      g.table_[relabel[a] * d + relabel[b]] = relabel[table[a][b]];

  for (Element a = 0; a < d; ++a) {
    bool found = false;
    for (Element b = 0; b < d && !found; ++b)
      found = g.mul(a, b) == 0 && g.mul(b, a) == 0;
    if (!found)
      throw Error(ErrorKind::NoInverse, "no inverse for element " + std::to_string(relabel[a]));
  }

  for (Element a = 0; a < d; ++a)
    for (Element b = 0; b < d; ++b) {
      Element ab = g.mul(a, b);
      for (Element c = 0; c < d; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "not associative at (" + std::to_string(relabel[a]) + ", " +
                          std::to_string(relabel[b]) + ", " + std::to_string(relabel[c]) + ")");
    }

  g.finish({});
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string name,
                                           const std::vector<std::vector<std::int64_t>> &generators,
                                           std::size_t cap) {
  std::size_t degree = generators.empty() ? 1 : generators.front().size();
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < generators.size(); ++i)
    gens.push_back(to_perm(generators[i], degree, i));

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Perm, Element> index{{id, 0}};
  std::vector<Perm> elements{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm &s : gens) {
      Perm y = compose(elements[i], s);
      if (index.contains(y)) continue;
      if (elements.size() >= cap)
        throw Error(ErrorKind::CapExceeded, "closure exceeds the element cap " +
                                                std::to_string(cap));
      index.emplace(y, static_cast<Element>(elements.size()));
      elements.push_back(std::move(y));
    }
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = elements.size();
  g.table_.assign(g.order_ * g.order_, 0);
  for (std::size_t a = 0; a < g.order_; ++a)
    for (std::size_t b = 0; b < g.order_; ++b)
      g.table_[a * g.order_ + b] = index.at(compose(elements[a], elements[b]));

  std::vector<Element> gen_ids;
  for (const Perm &s : gens) {
    Element id_s = index.at(s);
    if (id_s != 0 && std::find(gen_ids.begin(), gen_ids.end(), id_s) == gen_ids.end())
      gen_ids.push_back(id_s);
  }
  for (const Perm &p : elements) g.names_.push_back(cycle_notation(p));
  g.finish(std::move(gen_ids));
  return g;
}

FiniteGroup build_group(const GroupSpec &spec, std::size_t cap) {
  if (spec.table && spec.perm_generators)
    throw Error(ErrorKind::InvalidSpec, "group spec gives both 'table' and 'permGenerators'");
  if (spec.table) return FiniteGroup::from_table(spec.name, *spec.table, cap);
  if (spec.perm_generators)
    return FiniteGroup::from_permutations(spec.name, *spec.perm_generators, cap);
  throw Error(ErrorKind::InvalidSpec, "group spec needs 'table' or 'permGenerators'");
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
  std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::int64_t>((a + b) % n);
  return FiniteGroup::from_table("C" + std::to_string(n), t);
}

FiniteGroup symmetric_group(std::size_t degree, std::size_t cap) {
  if (degree <= 1) return FiniteGroup::from_permutations("S" + std::to_string(degree), {}, cap);
  std::vector<std::int64_t> swap(degree), cycle(degree);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<std::int64_t>((i + 1) % degree);
  return FiniteGroup::from_permutations("S" + std::to_string(degree), {swap, cycle}, cap);
}

namespace {

FiniteGroup quaternion_group() {
  // Element index = 4*sign + unit, with units (1, i, j, k).
  constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  std::vector<std::vector<std::int64_t>> t(8, std::vector<std::int64_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int s = (a / 4 + b / 4 + sign[a % 4][b % 4]) % 2;
      t[a][b] = 4 * s + unit[a % 4][b % 4];
    }
  return FiniteGroup::from_table("Q8", t);
}

}  // namespace

FiniteGroup builtin_group(std::string_view name) {
  if (name == "C1") return FiniteGroup::from_table("C1", {{0}});
  if (name == "C2") return cyclic_group(2);
  if (name == "C3") return cyclic_group(3);
  if (name == "C4") return cyclic_group(4);
  if (name == "V4")
    return FiniteGroup::from_table("V4", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  if (name == "S3") return FiniteGroup::from_permutations("S3", {{1, 0, 2}, {1, 2, 0}});
  if (name == "D4") return FiniteGroup::from_permutations("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}});
  if (name == "Q8") return quaternion_group();
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin group '" + std::string(name) + "'");
}

std::vector<std::string> builtin_group_names() {
  return {"C1", "C2", "C3", "C4", "V4", "S3", "D4", "Q8"};
}

}  // namespace wreathhom
