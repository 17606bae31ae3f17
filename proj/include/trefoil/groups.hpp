#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "trefoil/quandle.hpp"

namespace trefoil {

using Permutation = std::vector<Index>;

/// Closure of the generators under composition, as a multiplication table.
/// Element 0 is the identity; (p * q)(i) = q(p(i)) (apply p first).
FiniteGroup group_from_permutations(const std::vector<Permutation>& generators);

FiniteGroup cyclic_group(std::size_t n);
/// Symmetries of the regular n-gon, order 2n (n >= 3).
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t k);
FiniteGroup alternating_group(std::size_t k);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Parses "cyclic:N", "dihedral:N", "symmetric:K", "alternating:K",
/// "quaternion", "klein". Throws ParseError.
FiniteGroup parse_group(std::string_view spec);

/// All groups of order <= max_order in the stock families above (plus a few
/// direct products), with a short name for each.
struct NamedGroup {
  std::string name;
  FiniteGroup group;
};
std::vector<NamedGroup> stock_groups(std::size_t max_order);

}  // namespace trefoil
