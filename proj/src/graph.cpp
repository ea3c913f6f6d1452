#include "twapx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twapx {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(Vertex n) {
  VertexSet s;
  s.ids_.resize(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(s.ids_.begin(), s.ids_.end(), 0);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  r.ids_.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
  return r;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r.ids_));
  return r;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r.ids_));
  return r;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

Graph::Graph(Vertex n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(Vertex n, std::span<const Edge> edges) { build(n, edges); }

Graph::Graph(Vertex n, std::initializer_list<Edge> edges) {
  build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::build(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") outside vertex range " +
                              std::to_string(n));
    }
    if (u == v) continue;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  num_edges_ = 0;
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    num_edges_ += nb.size();
  }
  num_edges_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Vertex SubgraphView::local_of(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return -1;
  return static_cast<Vertex>(it - to_parent.begin());
}

VertexSet SubgraphView::to_parent_set(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent.at(v));
  return VertexSet(std::move(out));
}

VertexSet SubgraphView::to_local_set(const VertexSet& parent) const {
  std::vector<Vertex> out;
  out.reserve(parent.size());
  for (Vertex v : parent) {
    Vertex l = local_of(v);
    if (l < 0) throw std::out_of_range("vertex " + std::to_string(v) + " not in subgraph");
    out.push_back(l);
  }
  return VertexSet(std::move(out));
}

namespace {

void check_range(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s[0] < 0 || s[s.size() - 1] >= g.num_vertices())) {
    throw std::out_of_range("vertex set outside [0, " +
                            std::to_string(g.num_vertices()) + ")");
  }
}

}  // namespace

SubgraphView induced_subgraph(const Graph& g, const VertexSet& keep) {
  check_range(g, keep);
  std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), -1);
  SubgraphView view;
  view.kept = keep;
  view.to_parent.assign(keep.begin(), keep.end());
  for (std::size_t i = 0; i < view.to_parent.size(); ++i) {
    local[view.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < view.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(view.to_parent[i])) {
      Vertex j = local[w];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  view.graph = Graph(static_cast<Vertex>(keep.size()), edges);
  return view;
}

CliqueResult make_clique(const Graph& g, const VertexSet& s) {
  check_range(g, s);
  CliqueResult r;
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) r.fill_edges.emplace_back(s[i], s[j]);
    }
  }
  edges.insert(edges.end(), r.fill_edges.begin(), r.fill_edges.end());
  r.graph = Graph(g.num_vertices(), edges);
  return r;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  check_range(g, removed);
  const Vertex n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool exceeds_edge_bound(const Graph& g, int k) {
  return g.num_edges() > static_cast<std::size_t>(g.num_vertices()) *
                             static_cast<std::size_t>(std::max(k, 0));
}

}  // namespace twapx
