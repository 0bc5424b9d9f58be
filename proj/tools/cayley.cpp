#include "cayley.hpp"

#include "bicyclic/enumeration.hpp"

namespace bicyclic::cli {

CayleyGraph build_cayley(const BicyclicExtension& m, Int bound, const std::vector<Elem>& generators) {
  for (const Elem& g : generators) m.require(g);
  const Truncation trunc(bound, m.family());
  CayleyGraph graph;
  graph.nodes = trunc.elements();
  for (const Elem& x : graph.nodes) {
    for (const Elem& g : generators) {
      const Elem y = m.mul(x, g);
      if (trunc.contains(y)) graph.edges.push_back({x, g, y});
    }
  }
  return graph;
}

void write_dot(const CayleyGraph& g, std::ostream& out) {
  out << "digraph cayley {\n";
  for (const Elem& x : g.nodes) out << "  \"" << to_string(x) << "\";\n";
  for (const CayleyEdge& e : g.edges) {
    out << "  \"" << to_string(e.source) << "\" -> \"" << to_string(e.target)
        << "\" [label=\"" << to_string(e.generator) << "\"];\n";
  }
  out << "}\n";
}

void write_csv(const CayleyGraph& g, std::ostream& out) {
  out << "source,generator,target\n";
  for (const CayleyEdge& e : g.edges) {
    out << '"' << to_string(e.source) << "\",\"" << to_string(e.generator) << "\",\""
        << to_string(e.target) << "\"\n";
  }
}

}  // namespace bicyclic::cli
