#include "twapx/validation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace twapx {

int max_bag_width(const std::vector<VertexSet>& bags) {
  int width = -1;
  for (const auto& b : bags) width = std::max(width, static_cast<int>(b.size()) - 1);
  return width;
}

namespace {

// Position of each vertex in the order, or empty when not a permutation.
std::vector<int> positions(const Graph& g, const EliminationOrdering& peo) {
  const Vertex n = g.num_vertices();
  if (peo.order.size() != static_cast<std::size_t>(n)) return {};
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < peo.order.size(); ++i) {
    const Vertex v = peo.order[i];
    if (v < 0 || v >= n || pos[v] >= 0) return {};
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

// Later-neighbor clique test (Tarjan-Yannakakis). Returns the first vertex
// whose later neighbors are not a clique, with a non-adjacent pair.
struct PeoFailure {
  Vertex v;
  Vertex x;
  Vertex y;
};

std::optional<PeoFailure> find_peo_failure(const Graph& g, const std::vector<int>& pos,
                                           const std::vector<Vertex>& order) {
  for (Vertex v : order) {
    Vertex first = -1;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > pos[v] && (first < 0 || pos[u] < pos[first])) first = u;
    }
    if (first < 0) continue;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > pos[v] && u != first && !g.has_edge(first, u)) return PeoFailure{v, first, u};
    }
  }
  return std::nullopt;
}

// Shortest x-y path avoiding N[v] - {x, y}; together with v it closes a
// chordless cycle.
std::optional<std::vector<Vertex>> chordless_cycle_through(const Graph& g, Vertex v, Vertex x,
                                                           Vertex y) {
  const Vertex n = g.num_vertices();
  std::vector<char> banned(static_cast<std::size_t>(n), 0);
  banned[v] = 1;
  for (Vertex u : g.neighbors(v)) banned[u] = 1;
  banned[x] = 0;
  banned[y] = 0;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> q;
  q.push(x);
  seen[x] = 1;
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    if (u == y) break;
    for (Vertex w : g.neighbors(u)) {
      if (banned[w] || seen[w]) continue;
      // x and y are only reachable as endpoints, never through each other.
      if (u == x && w == y) continue;
      seen[w] = 1;
      parent[w] = u;
      q.push(w);
    }
  }
  if (!seen[y]) return std::nullopt;
  std::vector<Vertex> cycle{v};
  std::vector<Vertex> path;
  for (Vertex u = y; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

NotChordal find_chordless_cycle(const Graph& g, const PeoFailure& hint) {
  if (auto c = chordless_cycle_through(g, hint.v, hint.x, hint.y)) return {*c};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        if (auto c = chordless_cycle_through(g, v, nb[i], nb[j])) return {*c};
      }
    }
  }
  throw std::logic_error("non-chordal graph without a chordless cycle");
}

}  // namespace

ChordalityCertificate is_chordal(const Graph& g) {
  const Vertex n = g.num_vertices();
  // Maximum cardinality search with bucketed weights; ties go to the
  // smallest id through ordered buckets.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(n) + 1);
  for (Vertex v = n - 1; v >= 0; --v) buckets[0].push_back(v);
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  int top = 0;
  while (static_cast<Vertex>(visit.size()) < n) {
    while (true) {
      auto& b = buckets[top];
      while (!b.empty() && (numbered[b.back()] || weight[b.back()] != top)) b.pop_back();
      if (!b.empty()) break;
      --top;
    }
    // Lowest id among current max-weight candidates.
    auto& b = buckets[top];
    auto best_it = b.end() - 1;
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (!numbered[*it] && weight[*it] == top && *it < *best_it) best_it = it;
    }
    const Vertex v = *best_it;
    numbered[v] = 1;
    visit.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (numbered[u]) continue;
      ++weight[u];
      buckets[weight[u]].push_back(u);
      top = std::max(top, weight[u]);
    }
  }
  EliminationOrdering peo{std::vector<Vertex>(visit.rbegin(), visit.rend())};
  const auto pos = positions(g, peo);
  if (auto failure = find_peo_failure(g, pos, peo.order)) return find_chordless_cycle(g, *failure);
  return peo;
}

bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& order) {
  const auto pos = positions(g, order);
  if (pos.size() != static_cast<std::size_t>(g.num_vertices())) return false;
  return !find_peo_failure(g, pos, order.order).has_value();
}

int clique_number_chordal(const Graph& g, const EliminationOrdering& peo) {
  if (!is_perfect_elimination_ordering(g, peo)) {
    throw std::invalid_argument("not a perfect elimination ordering");
  }
  const auto pos = positions(g, peo);
  int best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int later = 0;
    for (Vertex u : g.neighbors(v)) later += pos[u] > pos[v] ? 1 : 0;
    best = std::max(best, later + 1);
  }
  return best;
}

std::vector<Violation> check_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::vector<Violation> out;
  const Vertex n = g.num_vertices();
  const int num_bags = static_cast<int>(td.bags.size());

  std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(n));
  for (int b = 0; b < num_bags; ++b) {
    for (Vertex v : td.bags[b]) {
      if (v < 0 || v >= n) {
        out.push_back({ViolationKind::kBagVertexOutOfRange, v, {-1, -1}, b,
                       "bag " + std::to_string(b) + " holds out-of-range vertex " + std::to_string(v)});
        continue;
      }
      bags_of[v].push_back(b);
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (bags_of[v].empty()) {
      out.push_back({ViolationKind::kVertexUncovered, v, {-1, -1}, -1,
                     "vertex " + std::to_string(v) + " is in no bag"});
    }
  }

  for (const auto& [u, v] : g.edges()) {
    const auto& bu = bags_of[u];
    const auto& bv = bags_of[v];
    // bags_of lists are ascending by construction.
    std::vector<int> common;
    std::set_intersection(bu.begin(), bu.end(), bv.begin(), bv.end(), std::back_inserter(common));
    if (common.empty()) {
      out.push_back({ViolationKind::kEdgeUncovered, -1, {u, v}, -1,
                     "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is in no bag"});
    }
  }

  // Tree shape: valid indices, no self-loops, acyclic, connected.
  std::vector<int> parent(static_cast<std::size_t>(num_bags));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool index_ok = true;
  int merges = 0;
  for (const auto& [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= num_bags || b >= num_bags || a == b) {
      index_ok = false;
      out.push_back({ViolationKind::kNotATree, -1, {-1, -1}, a,
                     "tree edge (" + std::to_string(a) + ", " + std::to_string(b) + ") is invalid"});
      continue;
    }
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) {
      out.push_back({ViolationKind::kNotATree, -1, {-1, -1}, a,
                     "tree edge (" + std::to_string(a) + ", " + std::to_string(b) + ") closes a cycle"});
    } else {
      parent[ra] = rb;
      ++merges;
    }
  }
  if (num_bags > 0 && merges != num_bags - 1) {
    out.push_back({ViolationKind::kNotATree, -1, {-1, -1}, -1,
                   "tree edges leave " + std::to_string(num_bags - merges) + " components"});
  }

  // Connected subtree per vertex: union the bags containing v along tree
  // edges whose both ends contain v.
  if (index_ok) {
    std::vector<std::vector<std::pair<int, int>>> shared(static_cast<std::size_t>(n));
    for (const auto& [a, b] : td.tree_edges) {
      for (Vertex v : set_intersection(td.bags[a], td.bags[b])) {
        if (v >= 0 && v < n) shared[v].emplace_back(a, b);
      }
    }
    std::vector<int> local(static_cast<std::size_t>(num_bags), -1);
    for (Vertex v = 0; v < n; ++v) {
      const auto& occ = bags_of[v];
      if (occ.size() <= 1) continue;
      for (std::size_t i = 0; i < occ.size(); ++i) local[occ[i]] = static_cast<int>(i);
      std::vector<int> dsu(occ.size());
      std::iota(dsu.begin(), dsu.end(), 0);
      auto f = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
      };
      std::size_t pieces = occ.size();
      for (const auto& [a, b] : shared[v]) {
        const int ra = f(local[a]);
        const int rb = f(local[b]);
        if (ra != rb) {
          dsu[ra] = rb;
          --pieces;
        }
      }
      if (pieces > 1) {
        out.push_back({ViolationKind::kSubtreeDisconnected, v, {-1, -1}, occ.front(),
                       "bags containing vertex " + std::to_string(v) + " form " +
                           std::to_string(pieces) + " disconnected pieces"});
      }
      for (int b : occ) local[b] = -1;
    }
  }

  const int width = max_bag_width(td.bags);
  if (td.width != width) {
    out.push_back({ViolationKind::kWidthMismatch, -1, {-1, -1}, -1,
                   "stored width " + std::to_string(td.width) + " but largest bag gives " +
                       std::to_string(width)});
  }
  return out;
}

int exact_treewidth(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n > kMaxExactTreewidthVertices) {
    throw std::invalid_argument("exact_treewidth: graph has " + std::to_string(n) +
                                " vertices, limit is " + std::to_string(kMaxExactTreewidthVertices));
  }
  if (n == 0) return -1;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // |Q(S, v)|: vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, Vertex v) {
    std::uint32_t comp = 1u << v;
    std::uint32_t nbrs = adj[v];
    while (true) {
      const std::uint32_t grow = nbrs & s & ~comp;
      if (!grow) break;
      comp |= grow;
      for (std::uint32_t rest = grow; rest; rest &= rest - 1) nbrs |= adj[std::countr_zero(rest)];
    }
    return std::popcount(nbrs & ~s & ~(1u << v));
  };
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const std::uint32_t without = s & ~(1u << v);
      const int cost = std::max<int>(tw[without], q_size(without, v));
      best = std::min(best, cost);
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  return tw[full];
}

namespace {

void check_brute_force_size(const Graph& g) {
  if (g.num_vertices() > kMaxBruteForceVertices) {
    throw std::invalid_argument("brute force limited to " + std::to_string(kMaxBruteForceVertices) +
                                " vertices");
  }
}

// Component labels of g - removed (bitmask), -1 on removed vertices.
std::vector<int> labels_without(const Graph& g, std::uint32_t removed) {
  const Vertex n = g.num_vertices();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if ((removed >> s) & 1u || label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if ((removed >> u) & 1u || label[u] >= 0) continue;
        label[u] = next;
        stack.push_back(u);
      }
    }
    ++next;
  }
  return label;
}

// Smallest popcount mask accepted by `ok` among masks disjoint from `forbidden`.
template <class Pred>
std::optional<int> smallest_mask(Vertex n, std::uint32_t forbidden, Pred ok) {
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::uint32_t m : masks) {
    if (m & forbidden) continue;
    if (ok(m)) return std::popcount(m);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> brute_force_min_separator(const Graph& g, const TerminalSpec& t,
                                             Terminals terminals_mode) {
  check_brute_force_size(g);
  if (!disjoint(t.side_a, t.side_b)) throw std::invalid_argument("terminal sides overlap");
  std::uint32_t terminals = 0;
  for (Vertex v : t.side_a) terminals |= 1u << v;
  for (Vertex v : t.side_b) terminals |= 1u << v;
  return smallest_mask(g.num_vertices(), terminals_mode == Terminals::kRemovable ? 0u : terminals, [&](std::uint32_t x) {
    const auto label = labels_without(g, x);
    for (Vertex a : t.side_a) {
      if (label[a] < 0) continue;
      for (Vertex b : t.side_b) {
        if (label[b] >= 0 && label[a] == label[b]) return false;
      }
    }
    return true;
  });
}

int brute_force_min_multiway_cut(const Graph& g, const std::array<VertexSet, 3>& groups) {
  check_brute_force_size(g);
  auto result = smallest_mask(g.num_vertices(), 0u, [&](std::uint32_t x) {
    const auto label = labels_without(g, x);
    std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()) + 1, -1);
    for (int i = 0; i < 3; ++i) {
      for (Vertex v : groups[i]) {
        if (label[v] < 0) continue;
        int& o = owner[label[v]];
        if (o >= 0 && o != i) return false;
        o = i;
      }
    }
    return true;
  });
  // Removing every vertex always works.
  return *result;
}

}  // namespace twapx
