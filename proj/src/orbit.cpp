#include "trefoil/orbit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "trefoil/error.hpp"

namespace trefoil {

std::optional<std::size_t> OrbitReport::find(const PFrac& x) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x,
                             [](const auto& entry, const PFrac& v) { return entry.first < v; });
  if (it == sorted_.end() || !(it->first == x)) return std::nullopt;
  return it->second;
}

std::string OrbitReport::witness(std::size_t node) const {
  std::string letters;
  std::size_t i = node;
  while (nodes_[i].parent) {
    letters.push_back(nodes_[i].letter);
    i = *nodes_[i].parent;
  }
  letters.push_back(nodes_[i].letter);
  std::reverse(letters.begin(), letters.end());
  return letters;
}

OrbitReport orbit_bfs(std::span<const PFrac> targets, const Int& bound) {
  if (bound < 1) throw DomainError("orbit: bound must be at least 1");
  const PFrac a = PFrac::zero(), b = PFrac::infinity();
  struct Move {
    char letter;
    const PFrac* by;
    bool inverse;
  };
  const Move moves[] = {{'a', &a, false}, {'A', &a, true}, {'b', &b, false}, {'B', &b, true}};

  OrbitReport report;
  std::map<PFrac, std::size_t> index;
  std::deque<std::size_t> queue;
  auto visit = [&](const PFrac& v, std::size_t depth, std::optional<std::size_t> parent, char letter) {
    auto [it, fresh] = index.emplace(v, report.nodes_.size());
    if (fresh) {
      report.nodes_.push_back({v, depth, parent, letter});
      queue.push_back(it->second);
    }
    return it->second;
  };
  visit(a, 0, std::nullopt, 'a');
  visit(b, 0, std::nullopt, 'b');

  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& mv : moves) {
      const PFrac& x = report.nodes_[cur].value;
      PFrac y = mv.inverse ? pf_op_inv(x, *mv.by) : pf_op(x, *mv.by);
      if (abs(y.p()) > bound || abs(y.q()) > bound) continue;
      std::size_t to = visit(y, report.nodes_[cur].depth + 1, cur, mv.letter);
      report.edges_.push_back({cur, to, mv.letter});
    }
  }
  report.sorted_.assign(index.begin(), index.end());
  for (const auto& t : targets) (index.count(t) ? report.reached_ : report.unreached_).push_back(t);
  return report;
}

std::string to_dot(const OrbitReport& report) {
  std::ostringstream out;
  out << "digraph orbit {\n";
  for (std::size_t i = 0; i < report.nodes().size(); ++i)
    out << "  n" << i << " [label=\"" << to_string(report.nodes()[i].value) << "\"];\n";
  for (const auto& e : report.edges())
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.letter << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace trefoil
