#include "twapx/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace twapx {

Graph path_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, std::span<const Edge>(e));
}

Graph cycle_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return Graph(n, std::span<const Edge>(e));
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::span<const Edge>(e));
}

Graph grid_graph(Vertex rows, Vertex cols) {
  std::vector<Edge> e;
  auto id = [cols](Vertex r, Vertex c) { return r * cols + c; };
  for (Vertex r = 0; r < rows; ++r) {
    for (Vertex c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(rows * cols, std::span<const Edge>(e));
}

Graph star_graph(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, std::span<const Edge>(e));
}

namespace {

std::vector<Edge> tree_edges(Vertex n, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    e.emplace_back(pick(rng), v);
  }
  return e;
}

std::vector<Edge> k_tree_edges(Vertex n, int k, std::mt19937_64& rng) {
  if (k < 1) throw std::invalid_argument("k-tree needs k >= 1");
  std::vector<Edge> e;
  const Vertex core = std::min<Vertex>(n, k + 1);
  for (Vertex u = 0; u < core; ++u)
    for (Vertex v = u + 1; v < core; ++v) e.emplace_back(u, v);
  // Every k-clique in use; new vertex v forms k new k-cliques.
  std::vector<std::vector<Vertex>> cliques;
  for (Vertex skip = 0; skip < core && core == k + 1; ++skip) {
    std::vector<Vertex> c;
    for (Vertex u = 0; u < core; ++u)
      if (u != skip) c.push_back(u);
    cliques.push_back(std::move(c));
  }
  for (Vertex v = core; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const std::vector<Vertex> base = cliques[pick(rng)];
    for (Vertex u : base) e.emplace_back(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<Vertex> c;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (i != drop) c.push_back(base[i]);
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }
  return e;
}

}  // namespace

Graph random_tree(Vertex n, std::mt19937_64& rng) {
  auto e = tree_edges(n, rng);
  return Graph(n, std::span<const Edge>(e));
}

Graph random_gnp(Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, std::span<const Edge>(e));
}

Graph random_k_tree(Vertex n, int k, std::mt19937_64& rng) {
  auto e = k_tree_edges(n, k, rng);
  return Graph(n, std::span<const Edge>(e));
}

Graph random_partial_k_tree(Vertex n, int k, double keep, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> kept;
  for (const Edge& e : k_tree_edges(n, k, rng))
    if (coin(rng)) kept.push_back(e);
  return Graph(n, std::span<const Edge>(kept));
}

Graph random_connected(Vertex n, double p, std::mt19937_64& rng) {
  auto e = tree_edges(n, rng);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, std::span<const Edge>(e));
}

}  // namespace twapx
