#pragma once

#include <utility>
#include <vector>

#include "twapx/graph.hpp"

namespace twapx {

/// Tree of vertex bags. width is max bag size - 1 (-1 with no bags).
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int width = -1;

  bool operator==(const TreeDecomposition&) const = default;
};

int max_bag_width(const std::vector<VertexSet>& bags);

/// Vertex order in which every vertex's later neighbors form a clique.
struct EliminationOrdering {
  std::vector<Vertex> order;

  bool operator==(const EliminationOrdering&) const = default;
};

/// A chordal supergraph of `base` together with its certificate.
struct Triangulation {
  Graph base;
  std::vector<Edge> fill_edges;
  Graph chordal;
  EliminationOrdering peo;
  int clique_number = 0;
};

}  // namespace twapx
