#include <map>
#include <sstream>
#include <vector>

#include "fibsearch/decision_tree.hpp"

namespace fibsearch {

std::string to_dot(const Tree& tree) {
  std::ostringstream out;
  out << "digraph lopsided {\n";
  out << "  graph [ordering=out];\n";
  out << "  node [shape=circle, fontsize=10];\n";
  const auto nodes = tree.nodes();
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    out << "  n" << id << " [label=\"L" << nodes[id].level << "\"";
    if (nodes[id].is_leaf()) out << ", shape=box";
    out << "];\n";
  }
  std::map<Level, std::vector<std::size_t>> ranks;
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    ranks[nodes[id].level].push_back(id);
  }
  for (const auto& [level, ids] : ranks) {
    out << "  { rank=same;";
    for (std::size_t id : ids) out << " n" << id << ";";
    out << " }\n";
  }
  const WeightVector& w = tree.weights();
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    for (const TreeEdge& e : tree.children(nodes[id])) {
      out << "  n" << id << " -> n" << e.child << " [label=\"" << e.outcome
          << ":" << w[e.outcome] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fibsearch
