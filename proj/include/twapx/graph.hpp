#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace twapx {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(Vertex n);

  bool contains(Vertex v) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::span<const Vertex> ids() const { return ids_; }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b);

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction normalizes the edge list: self-loops are dropped, each
/// unordered pair is kept once. Endpoints outside [0, n) throw
/// std::out_of_range.
class Graph {
public:
  Graph() = default;
  explicit Graph(Vertex n);
  Graph(Vertex n, std::span<const Edge> edges);
  Graph(Vertex n, std::initializer_list<Edge> edges);

  Vertex num_vertices() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

private:
  void build(Vertex n, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// Induced subgraph with local ids 0..|kept|-1 assigned in ascending
/// parent-id order.
struct SubgraphView {
  Graph graph;
  VertexSet kept;
  std::vector<Vertex> to_parent;

  Vertex parent_of(Vertex local) const { return to_parent[local]; }
  /// Local id of a parent vertex, or -1 when it is not kept.
  Vertex local_of(Vertex parent) const;
  VertexSet to_parent_set(const VertexSet& local) const;
  VertexSet to_local_set(const VertexSet& parent) const;
};

SubgraphView induced_subgraph(const Graph& g, const VertexSet& keep);

struct CliqueResult {
  Graph graph;
  std::vector<Edge> fill_edges;
};

/// Adds every missing pair inside `s`.
CliqueResult make_clique(const Graph& g, const VertexSet& s);

/// Components of g minus `removed`, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet& removed = {});

/// True when |E| > |V|*k, which rules out treewidth <= k-1.
bool exceeds_edge_bound(const Graph& g, int k);

}  // namespace twapx
