#pragma once

#include <random>

#include "twapx/graph.hpp"

namespace twapx {

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph grid_graph(Vertex rows, Vertex cols);
Graph star_graph(Vertex leaves);

Graph random_tree(Vertex n, std::mt19937_64& rng);
Graph random_gnp(Vertex n, double p, std::mt19937_64& rng);

/// Random k-tree: a (k+1)-clique, then each new vertex joined to a random
/// existing k-clique. Treewidth exactly k when n > k.
Graph random_k_tree(Vertex n, int k, std::mt19937_64& rng);

/// Random k-tree with each edge kept with probability keep; treewidth <= k.
Graph random_partial_k_tree(Vertex n, int k, double keep, std::mt19937_64& rng);

/// random_gnp conditioned on connectivity (a random spanning tree is added).
Graph random_connected(Vertex n, double p, std::mt19937_64& rng);

}  // namespace twapx
