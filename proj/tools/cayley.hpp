#pragma once

#include <ostream>
#include <vector>

#include "bicyclic/monoid.hpp"

namespace bicyclic::cli {

struct CayleyEdge {
  Elem source;
  Elem generator;
  Elem target;
};

/// Right-multiplication graph of a truncation: one node per element, an
/// edge x -> x g for each generator g whenever x g stays in the truncation.
struct CayleyGraph {
  std::vector<Elem> nodes;
  std::vector<CayleyEdge> edges;
};

CayleyGraph build_cayley(const BicyclicExtension& m, Int bound, const std::vector<Elem>& generators);

void write_dot(const CayleyGraph& g, std::ostream& out);
void write_csv(const CayleyGraph& g, std::ostream& out);

}  // namespace bicyclic::cli
