#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trefoil/fraction.hpp"

namespace trefoil {

/// Breadth-first closure of {0/1, 1/0} under the right translations by a and b
/// (*a, *bar a, *b, *bar b), restricted to points with |p|, |q| <= bound.
/// Since *y for every y is a product of these four, this is the closure under
/// pf_op / pf_op_inv.
class OrbitReport {
 public:
  struct Node {
    PFrac value;
    std::size_t depth;
    std::optional<std::size_t> parent;
    char letter;  // seed generator for roots, operator letter otherwise
  };
  struct Edge {
    std::size_t from, to;
    char letter;
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<PFrac>& reached() const { return reached_; }
  const std::vector<PFrac>& unreached() const { return unreached_; }

  std::optional<std::size_t> find(const PFrac& x) const;
  /// A word (grammar of the word-quandle module) whose fraction image is the
  /// node's value: seed letter followed by the BFS path letters.
  std::string witness(std::size_t node) const;

 private:
  friend OrbitReport orbit_bfs(std::span<const PFrac> targets, const Int& bound);
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<PFrac> reached_, unreached_;
  std::vector<std::pair<PFrac, std::size_t>> sorted_;  // value -> node, for find()
};

/// Throws DomainError if bound < 1.
OrbitReport orbit_bfs(std::span<const PFrac> targets, const Int& bound);

/// Graphviz rendering: nodes labelled "p/q", edges labelled a/A/b/B.
std::string to_dot(const OrbitReport& report);

}  // namespace trefoil
