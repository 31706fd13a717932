#pragma once

#include <string>
#include <vector>

#include "grouplie/group.hpp"

namespace grouplie {

GroupTable cyclic_group(int n);
/// Dihedral group of order 2n, named "D<2n>".
GroupTable dihedral_group(int n);
GroupTable symmetric_group(int n);
GroupTable alternating_group(int n);
GroupTable quaternion_group();
/// (a, b) has index a * |B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
/// G ⋊ <tau> of order 2|G| with (g,i)(h,j) = (g tau^i(h), i+j mod 2); (g, i) has index g + i|G|,
/// so G embeds as the indices below |G|.
GroupTable semidirect_product(const GroupTable& g, const InvolutiveAutomorphism& tau);
/// Z/n ⋊ Z/k where the generator of Z/k acts by x -> r x; needs r^k = 1 mod n.
GroupTable metacyclic_group(int n, int k, int r);

/// Named constructor: cyclic, dihedral, symmetric, alternating, quaternion8, direct_product,
/// elementary_abelian, metacyclic, semidirect_product. The group arguments of the product
/// constructors are passed as already-built tables.
GroupTable catalog(const std::string& name, const std::vector<int>& params,
                   const std::vector<GroupTable>& factors = {},
                   const InvolutiveAutomorphism* tau = nullptr);

/// Parses a group spec string:
///   cyclic:12  dihedral:4  symmetric:3  alternating:4  quaternion8  elementary_abelian:2,3
///   metacyclic:7,3,2  product:<spec>,<spec>  semidirect:<spec>,<id|inv|auto:file>
///   file:<path.json>
/// Commas inside parentheses do not split, e.g. product:(product:cyclic:2,cyclic:2),cyclic:2.
GroupTable parse_group_spec(const std::string& spec);

/// Group from JSON text: {"name": str, "table": [[int]]} or {"name": str, "generators": [[int]]}.
GroupTable group_from_json(const std::string& text);

/// Automorphism from JSON text {"label": str, "map": [int]}.
InvolutiveAutomorphism automorphism_from_json(const GroupTable& g, const std::string& text);

/// id everywhere; inv on abelian groups of exponent > 2; conjugation by the lowest-index
/// involution on non-abelian groups.
std::vector<InvolutiveAutomorphism> curated_automorphisms(const GroupTable& g);

struct CatalogItem {
  std::string spec;
  std::string description;
};

/// Groups of the default verification suite with order <= max_order.
std::vector<CatalogItem> default_suite(std::size_t max_order);

}  // namespace grouplie
