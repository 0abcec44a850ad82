#include "wreathhom/orbit_types.hpp"

#include "wreathhom/error.hpp"

namespace wreathhom {

TransferMap transfer_map(const FiniteGroup &group, const PermutationAction &action,
                         const Abelianization &abelianization) {
  const AbelianGroup &target = abelianization.group;
  TransferMap out;
  out.values.assign(group.order(), 0);
  for (Element g = 0; g < group.order(); ++g) {
    AbelianGroup::Index sum = 0;
    for (std::uint32_t j = 0; j < action.degree; ++j) {
      Element t_j = action.transversal[j];
      Element t_gj = action.transversal[action.image(g, j)];
      Element u = group.mul(group.mul(group.inv(t_gj), g), t_j);
      AbelianGroup::Index projected = abelianization.projection[u];
      if (projected == Abelianization::kOutside)
        throw Error(ErrorKind::InvalidArgument, "transfer: coset representative mismatch");
      sum = target.add(sum, projected);
    }
    out.values[g] = sum;
  }
  return out;
}

OrbitTypeData orbit_type_data(const FiniteGroup &group, const AbelianGroup &coefficients,
                              std::size_t class_id, const SubgroupClass &subgroup,
                              const Abelianization &abelianization, const TransferMap &transfer,
                              const HomGroup &homs) {
  OrbitTypeData data;
  data.class_id = class_id;
  data.k = subgroup.index;
  data.c = subgroup.centralizer_order;

  BigInt free_decorations;
  mpz_ui_pow_ui(free_decorations.get_mpz_t(), coefficients.order(), data.k - 1);
  data.w = free_decorations * hom_count_abelian(abelianization.group, coefficients);

  data.N.assign(homs.size(), 0);
  for (const AbelianHom &u : enumerate_abelian_homs(abelianization.group, coefficients)) {
    HomToA psi;
    psi.values.resize(group.order());
    for (Element g = 0; g < group.order(); ++g)
      psi.values[g] = apply_abelian_hom(u, abelianization.group, coefficients, transfer.values[g]);
    data.N[homs.index_of(psi)] += free_decorations;
  }
  return data;
}

WreathModel build_wreath_model(FiniteGroup group, AbelianGroup coefficients) {
  HomGroup homs = hom_group(group, coefficients);
  std::vector<OrbitType> types;
  auto classes = subgroup_classes(group);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    OrbitType t;
    t.subgroup = std::move(classes[i]);
    t.action = coset_action(group, t.subgroup);
    t.abelianization = abelianization(group, t.subgroup);
    t.transfer = transfer_map(group, t.action, t.abelianization);
    t.local_homs = enumerate_abelian_homs(t.abelianization.group, coefficients);
    t.data = orbit_type_data(group, coefficients, i, t.subgroup, t.abelianization, t.transfer, homs);
    types.push_back(std::move(t));
  }
  return WreathModel{std::move(group), std::move(coefficients), std::move(homs), std::move(types)};
}

}  // namespace wreathhom
