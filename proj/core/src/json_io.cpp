#include "wreathhom/json_io.hpp"

#include <fstream>

#include "wreathhom/error.hpp"

namespace wreathhom {

namespace {

std::vector<std::vector<std::int64_t>> int_matrix(const Json &j, const char *key) {
  const Json &m = j.at(key);
  if (!m.is_array()) throw Error(ErrorKind::InvalidSpec, std::string("'") + key + "' must be an array");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto &row : m) {
    if (!row.is_array())
      throw Error(ErrorKind::InvalidSpec, std::string("'") + key + "' must be an array of arrays");
    std::vector<std::int64_t> r;
    for (const auto &v : row) {
      if (!v.is_number_integer())
        throw Error(ErrorKind::InvalidSpec, std::string("'") + key + "' entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

GroupSpec group_spec_from_json(const Json &j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidSpec, "group spec must be a JSON object");
  GroupSpec spec;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorKind::InvalidSpec, "'name' must be a string");
    spec.name = j["name"].get<std::string>();
  }
  if (j.contains("table")) spec.table = int_matrix(j, "table");
  if (j.contains("permGenerators")) spec.perm_generators = int_matrix(j, "permGenerators");
  if (spec.table.has_value() == spec.perm_generators.has_value())
    throw Error(ErrorKind::InvalidSpec, "group spec needs exactly one of 'table' or 'permGenerators'");
  return spec;
}

Json to_json(const GroupSpec &spec) {
  Json j;
  j["name"] = spec.name;
  if (spec.table) j["table"] = *spec.table;
  if (spec.perm_generators) j["permGenerators"] = *spec.perm_generators;
  return j;
}

GroupSpec load_group_spec(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open group spec '" + path.string() + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::InvalidSpec, "cannot parse '" + path.string() + "': " + e.what());
  }
  return group_spec_from_json(j);
}

AbelianGroup abelian_group_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("invariantFactors") || !j["invariantFactors"].is_array())
    throw Error(ErrorKind::InvalidSpec, "abelian group needs an 'invariantFactors' array");
  std::vector<std::uint64_t> factors;
  for (const auto &v : j["invariantFactors"]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw Error(ErrorKind::InvalidSpec, "invariant factors must be non-negative integers");
    factors.push_back(v.get<std::uint64_t>());
  }
  return AbelianGroup(std::move(factors));
}

Json to_json(const AbelianGroup &group) {
  Json j;
  j["invariantFactors"] = group.invariant_factors();
  return j;
}

Json to_json(const HomToA &hom, const AbelianGroup &target) {
  Json j = Json::array();
  for (auto v : hom.values) j.push_back(target.coords(v));
  return j;
}

HomToA hom_from_json(const Json &j, const AbelianGroup &target) {
  HomToA hom;
  for (const auto &row : j) {
    auto coords = row.get<std::vector<std::uint64_t>>();
    if (coords.size() != target.rank())
      throw Error(ErrorKind::InvalidSpec, "coordinate vector has the wrong length");
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] >= target.invariant_factors()[i])
        throw Error(ErrorKind::InvalidSpec, "coordinate out of range");
    hom.values.push_back(target.index(coords));
  }
  return hom;
}

Json to_json(const BigInt &value) { return to_decimal(value); }

BigInt bigint_from_json(const Json &j) {
  if (!j.is_string()) throw Error(ErrorKind::InvalidSpec, "big integers are decimal strings");
  return parse_bigint(j.get<std::string>());
}

Json to_json(const Rational &value) {
  Json j;
  j["num"] = to_decimal(BigInt(value.get_num()));
  j["den"] = to_decimal(BigInt(value.get_den()));
  return j;
}

Rational rational_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error(ErrorKind::InvalidSpec, "rationals are {\"num\", \"den\"} objects");
  BigInt den = bigint_from_json(j["den"]);
  if (den == 0) throw Error(ErrorKind::InvalidSpec, "zero denominator");
  Rational out(bigint_from_json(j["num"]), den);
  out.canonicalize();
  return out;
}

Json to_json(const OrbitTypeData &data) {
  Json j;
  j["classId"] = data.class_id;
  j["k"] = data.k;
  j["c"] = data.c;
  j["w"] = to_json(data.w);
  Json n = Json::array();
  for (const auto &v : data.N) n.push_back(to_json(v));
  j["N"] = std::move(n);
  return j;
}

Json to_json(const CountTable &table) {
  Json j;
  j["nMax"] = table.n_max;
  Json t = Json::array();
  for (const auto &v : table.t) t.push_back(to_json(v));
  j["t"] = std::move(t);
  Json a = Json::array();
  for (const auto &v : table.class_weights) a.push_back(to_json(v));
  j["classWeights"] = std::move(a);
  return j;
}

Json to_json(const DistributionTable &table) {
  Json j;
  j["n"] = table.n;
  Json f = Json::array(), p = Json::array();
  for (const auto &v : table.fiber_counts) f.push_back(to_json(v));
  for (const auto &v : table.probs) p.push_back(to_json(v));
  j["fiberCounts"] = std::move(f);
  j["probs"] = std::move(p);
  return j;
}

Json to_json(const WreathHom &hom) {
  Json perm = Json::array(), decor = Json::array();
  for (const auto &x : hom.generator_images) {
    perm.push_back(x.perm);
    decor.push_back(x.decor);
  }
  Json j;
  j["perm"] = std::move(perm);
  j["decor"] = std::move(decor);
  return j;
}

WreathHom wreath_hom_from_json(const Json &j) {
  WreathHom hom;
  const auto &perm = j.at("perm");
  const auto &decor = j.at("decor");
  if (perm.size() != decor.size())
    throw Error(ErrorKind::InvalidSpec, "'perm' and 'decor' must have one row per generator");
  for (std::size_t r = 0; r < perm.size(); ++r) {
    WreathElement x;
    x.perm = perm[r].get<std::vector<std::uint32_t>>();
    x.decor = decor[r].get<std::vector<AbelianGroup::Index>>();
    if (x.perm.size() != x.decor.size())
      throw Error(ErrorKind::InvalidSpec, "permutation and decoration lengths differ");
    hom.n = x.perm.size();
    hom.generator_images.push_back(std::move(x));
  }
  return hom;
}

}  // namespace wreathhom
