#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "wreathhom/abelian_group.hpp"
#include "wreathhom/abelian_hom.hpp"
#include "wreathhom/bigint.hpp"
#include "wreathhom/counting.hpp"
#include "wreathhom/finite_group.hpp"
#include "wreathhom/orbit_types.hpp"
#include "wreathhom/sampler.hpp"

// Wire formats:
//   GroupSpec      {"name": s, "table": [[int]]} | {"name": s, "permGenerators": [[int]]}
//   AbelianGroup   {"invariantFactors": [int]}
//   HomToA         [[int]]   one mixed-radix coordinate vector per element of G
//   big integers   decimal strings
//   rationals      {"num": s, "den": s}
//   WreathHom      {"perm": [[int]], "decor": [[int]]}   one row per generator
namespace wreathhom {

using Json = nlohmann::ordered_json;

GroupSpec group_spec_from_json(const Json &j);
Json to_json(const GroupSpec &spec);
/// Reads and parses a GroupSpec file; I/O and syntax errors raise InvalidSpec.
GroupSpec load_group_spec(const std::filesystem::path &path);

AbelianGroup abelian_group_from_json(const Json &j);
Json to_json(const AbelianGroup &group);

Json to_json(const HomToA &hom, const AbelianGroup &target);
HomToA hom_from_json(const Json &j, const AbelianGroup &target);

Json to_json(const BigInt &value);
BigInt bigint_from_json(const Json &j);
Json to_json(const Rational &value);
Rational rational_from_json(const Json &j);

Json to_json(const OrbitTypeData &data);
Json to_json(const CountTable &table);
Json to_json(const DistributionTable &table);
Json to_json(const WreathHom &hom);
WreathHom wreath_hom_from_json(const Json &j);

}  // namespace wreathhom
