#include "trefoil/groups.hpp"

#include <map>
#include <numeric>
#include <string>

#include "trefoil/error.hpp"

namespace trefoil {

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

std::size_t parse_size(std::string_view text) {
  if (text.empty() || text.size() > 6) throw ParseError("expected a small positive integer, got '" + std::string(text) + "'");
  std::size_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("expected a small positive integer, got '" + std::string(text) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace

FiniteGroup group_from_permutations(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw DomainError("group: no generators");
  const std::size_t degree = generators.front().size();
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, Index> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      if (g.size() != degree) throw DomainError("group: generators act on different degrees");
      auto p = compose(elems[i], g);
      if (index.emplace(p, static_cast<Index>(elems.size())).second) elems.push_back(std::move(p));
    }
  }
  std::vector<std::vector<Index>> mul(elems.size(), std::vector<Index>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) mul[i][j] = index.at(compose(elems[i], elems[j]));
  return FiniteGroup(std::move(mul));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group: order must be positive");
  std::vector<std::vector<Index>> mul(n, std::vector<Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = static_cast<Index>((i + j) % n);
  return FiniteGroup(std::move(mul));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw DomainError("dihedral group: n must be at least 3");
  Permutation rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Index>((i + 1) % n);
    ref[i] = static_cast<Index>((n - i) % n);
  }
  return group_from_permutations({rot, ref});
}

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0) throw DomainError("symmetric group: degree must be positive");
  if (k == 1) return cyclic_group(1);
  Permutation swap(k), cycle(k);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < k; ++i) cycle[i] = static_cast<Index>((i + 1) % k);
  return group_from_permutations({swap, cycle});
}

FiniteGroup alternating_group(std::size_t k) {
  if (k < 3) return cyclic_group(1);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < k; ++i) {
    Permutation c(k);
    std::iota(c.begin(), c.end(), 0);
    c[0] = 1;
    c[1] = static_cast<Index>(i);
    c[i] = 0;
    gens.push_back(std::move(c));
  }
  return group_from_permutations(gens);
}

FiniteGroup quaternion_group() {
  // Regular representation of Q8 on {1,i,j,k,-1,-i,-j,-k} by right multiplication
  // with i and j.
  const Permutation right_i = {1, 4, 7, 2, 5, 0, 3, 6};
  const Permutation right_j = {2, 3, 4, 5, 6, 7, 0, 1};
  return group_from_permutations({right_i, right_j});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.size(), n = h.size();
  std::vector<std::vector<Index>> mul(m * n, std::vector<Index>(m * n));
  for (Index a = 0; a < m * n; ++a)
    for (Index b = 0; b < m * n; ++b)
      mul[a][b] = static_cast<Index>(g.mul(a / n, b / n) * n + h.mul(a % n, b % n));
  return FiniteGroup(std::move(mul));
}

FiniteGroup parse_group(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view family = spec.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw ParseError("group '" + std::string(family) + "' needs a size argument");
    return parse_size(arg);
  };
  if (family == "cyclic") return cyclic_group(need_arg());
  if (family == "dihedral") return dihedral_group(need_arg());
  if (family == "symmetric") return symmetric_group(need_arg());
  if (family == "alternating") return alternating_group(need_arg());
  if (family == "quaternion") return quaternion_group();
  if (family == "klein") return direct_product(cyclic_group(2), cyclic_group(2));
  throw ParseError("unknown group '" + std::string(spec) + "'");
}

std::vector<NamedGroup> stock_groups(std::size_t max_order) {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, FiniteGroup g) {
    if (g.size() <= max_order) out.push_back({std::move(name), std::move(g)});
  };
  for (std::size_t n = 1; n <= max_order; ++n) add("cyclic:" + std::to_string(n), cyclic_group(n));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) add("dihedral:" + std::to_string(n), dihedral_group(n));
  for (std::size_t k = 3; k <= 4; ++k) {
    add("symmetric:" + std::to_string(k), symmetric_group(k));
    add("alternating:" + std::to_string(k), alternating_group(k));
  }
  add("quaternion", quaternion_group());
  add("klein", direct_product(cyclic_group(2), cyclic_group(2)));
  add("cyclic:2xcyclic:4", direct_product(cyclic_group(2), cyclic_group(4)));
  add("cyclic:2xcyclic:2xcyclic:2", direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
  add("symmetric:3xcyclic:2", direct_product(symmetric_group(3), cyclic_group(2)));
  add("symmetric:3xcyclic:3", direct_product(symmetric_group(3), cyclic_group(3)));
  add("quaternionxcyclic:3", direct_product(quaternion_group(), cyclic_group(3)));
  add("alternating:4xcyclic:2", direct_product(alternating_group(4), cyclic_group(2)));
  return out;
}

}  // namespace trefoil
