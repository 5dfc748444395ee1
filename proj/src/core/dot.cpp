#include "fim/dot.hpp"

#include <sstream>

namespace fim {

namespace {

std::string vertex_name(const Word& v, int rank) {
  return v.empty() ? std::string("1") : to_text(v, rank);
}

}  // namespace

std::string to_dot(const MunnTree& tree) {
  const int rank = tree.rank();
  std::ostringstream out;
  out << "digraph munn {\n";
  out << "  node [shape=circle];\n";
  for (const Word& v : tree.vertices()) {
    const std::string name = vertex_name(v, rank);
    out << "  \"" << name << "\" [label=\"" << name << "\"";
    if (v.empty()) out << ", shape=doublecircle";
    if (v == tree.end_vertex()) out << ", style=filled";
    out << "];\n";
  }
  for (const MunnEdge& e : tree.edges()) {
    Word target = free_reduce_product(e.source, Word{gen(e.generator)});
    out << "  \"" << vertex_name(e.source, rank) << "\" -> \""
        << vertex_name(target, rank) << "\" [label=\"x" << e.generator
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fim
