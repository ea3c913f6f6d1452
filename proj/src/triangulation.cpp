#include "twapx/triangulation.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "twapx/flow.hpp"
#include "twapx/validation.hpp"

namespace twapx {
namespace {

struct Split {
  VertexSet x;
  std::vector<VertexSet> sides;
};

using SplitFn = std::function<std::optional<Split>(const Graph&, const VertexSet&, int)>;

// W plus the smallest ids outside it, up to `target` vertices.
VertexSet pad(const VertexSet& w, int target, Vertex n) {
  if (static_cast<int>(w.size()) >= target) return w;
  std::vector<Vertex> out(w.begin(), w.end());
  for (Vertex v = 0; v < n && static_cast<int>(out.size()) < target; ++v) {
    if (!w.contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet map_ids(const VertexSet& local, const std::vector<Vertex>& to_top) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_top[v]);
  return VertexSet(std::move(out));
}

void check_split(const Graph& g, const Split& s) {
  std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()), -2);
  for (Vertex v : s.x) owner[v] = -1;
  std::size_t total = s.x.size();
  int non_empty = 0;
  for (std::size_t i = 0; i < s.sides.size(); ++i) {
    total += s.sides[i].size();
    if (!s.sides[i].empty()) ++non_empty;
    for (Vertex v : s.sides[i]) {
      if (owner[v] != -2) throw std::logic_error("separator sides overlap");
      owner[v] = static_cast<int>(i);
    }
  }
  if (total != static_cast<std::size_t>(g.num_vertices())) {
    throw std::logic_error("separator sides do not cover the graph");
  }
  if (non_empty < 2) throw std::logic_error("split with fewer than two non-empty sides");
  for (const auto& [u, v] : g.edges()) {
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) {
      throw std::logic_error("edge crosses separated sides");
    }
  }
}

class Driver {
public:
  Driver(int k, int base_limit, int nominal, bool adaptive, SplitFn split)
      : k_(k), base_limit_(base_limit), nominal_(nominal), adaptive_(adaptive),
        split_(std::move(split)) {}

  std::optional<RecursionTrace> run(const Graph& g) {
    trace_.clear();
    std::vector<Vertex> identity(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) identity[v] = v;
    if (!recurse(g, identity, VertexSet{}, -1)) return std::nullopt;
    return std::move(trace_);
  }

private:
  std::optional<Split> find_split(const Graph& g, const VertexSet& w) {
    const int full = std::min<int>(g.num_vertices(), nominal_);
    if (!adaptive_ || static_cast<int>(w.size()) >= full) {
      return split_(g, pad(w, full, g.num_vertices()), k_);
    }
    for (int size = std::max<int>(static_cast<int>(w.size()), 2); size <= full; ++size) {
      if (auto s = split_(g, pad(w, size, g.num_vertices()), k_)) return s;
    }
    return std::nullopt;
  }

  bool recurse(const Graph& g, const std::vector<Vertex>& to_top, const VertexSet& w, int parent) {
    const Vertex n = g.num_vertices();
    if (n <= base_limit_) {
      trace_.push_back({parent, map_ids(VertexSet::range(n), to_top)});
      return true;
    }
    auto split = find_split(g, w);
    if (!split) return false;
    check_split(g, *split);

    const int node = static_cast<int>(trace_.size());
    trace_.push_back({parent, map_ids(set_union(w, split->x), to_top)});
    for (const VertexSet& side : split->sides) {
      if (side.empty()) continue;
      const SubgraphView sub = induced_subgraph(g, set_union(side, split->x));
      const VertexSet child_w = sub.to_local_set(set_union(set_intersection(side, w), split->x));
      std::vector<Vertex> child_to_top(sub.to_parent.size());
      for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        child_to_top[i] = to_top[sub.to_parent[i]];
      }
      if (!recurse(sub.graph, child_to_top, child_w, node)) return false;
    }
    return true;
  }

  int k_;
  int base_limit_;
  int nominal_;
  bool adaptive_;
  SplitFn split_;
  RecursionTrace trace_;
};

TriangOutcome finish(const Graph& g, int k, std::optional<RecursionTrace> trace,
                     int clique_bound) {
  TriangOutcome out;
  out.k = k;
  if (!trace) return out;
  TreeDecomposition td = assemble_tree_decomposition(*trace);
  Triangulation tri = triangulation_from_bags(g, td.bags);
  if (tri.clique_number > clique_bound) {
    throw std::logic_error("clique number " + std::to_string(tri.clique_number) +
                           " exceeds guaranteed bound " + std::to_string(clique_bound));
  }
  out.success = TriangSuccess{std::move(tri), std::move(td)};
  return out;
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

Split to_split(TwoWaySep s) { return {std::move(s.x), {std::move(s.s1), std::move(s.s2)}}; }

Split to_split(ThreeWaySep s) {
  return {std::move(s.x), {std::move(s.s[0]), std::move(s.s[1]), std::move(s.s[2])}};
}

}  // namespace

TreeDecomposition assemble_tree_decomposition(const RecursionTrace& trace) {
  TreeDecomposition td;
  td.bags.reserve(trace.size());
  int previous_root = -1;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    td.bags.push_back(trace[i].bag);
    const int parent = trace[i].parent;
    if (parent >= 0) {
      td.tree_edges.emplace_back(parent, static_cast<int>(i));
    } else {
      if (previous_root >= 0) td.tree_edges.emplace_back(previous_root, static_cast<int>(i));
      previous_root = static_cast<int>(i);
    }
  }
  td.width = max_bag_width(td.bags);
  return td;
}

Triangulation triangulation_from_bags(const Graph& base, const std::vector<VertexSet>& bags) {
  std::vector<Edge> edges = base.edges();
  for (const VertexSet& bag : bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      for (std::size_t j = i + 1; j < bag.size(); ++j) edges.emplace_back(bag[i], bag[j]);
    }
  }
  Triangulation tri;
  tri.base = base;
  tri.chordal = Graph(base.num_vertices(), std::span<const Edge>(edges));
  for (const Edge& e : tri.chordal.edges()) {
    if (!base.has_edge(e.first, e.second)) tri.fill_edges.push_back(e);
  }
  auto cert = is_chordal(tri.chordal);
  if (!std::holds_alternative<EliminationOrdering>(cert)) {
    throw std::logic_error("bag cliques did not produce a chordal graph");
  }
  tri.peo = std::get<EliminationOrdering>(std::move(cert));
  tri.clique_number = clique_number_chordal(tri.chordal, tri.peo);
  return tri;
}

TriangOutcome triang_2way_23(const Graph& g, int k, bool adaptive) {
  check_k(k);
  Driver driver(k, 4 * k, 3 * k + 2, adaptive,
                [](const Graph& sub, const VertexSet& w, int kk) -> std::optional<Split> {
                  auto s = two_thirds_vtx_sep(sub, w, kk);
                  if (!s) return std::nullopt;
                  return to_split(std::move(*s));
                });
  return finish(g, k, driver.run(g), 4 * k + 1);
}

TriangOutcome triang_2way_half(const Graph& g, int k, bool adaptive) {
  check_k(k);
  Driver driver(k, 4 * k, 3 * k + 2, adaptive,
                [](const Graph& sub, const VertexSet& w, int kk) -> std::optional<Split> {
                  auto s = two_way_half_vtx_sep(sub, w, kk);
                  if (!s) return std::nullopt;
                  return to_split(std::move(*s));
                });
  return finish(g, k, driver.run(g), Rational{9, 2}.floor_mul(k) + 2);
}

namespace {

Rational two_alpha_plus_one(Rational alpha) { return {2 * alpha.num + alpha.den, alpha.den}; }

TriangOutcome run_generic(const Graph& g, int k, const ThreeWayOracle& oracle,
                          const SizeFn& bound_fn, const SizeFn& base_fn, const SizeFn& pad_fn,
                          bool adaptive, int clique_bound) {
  check_k(k);
  const int bound = bound_fn(k);
  Driver driver(k, base_fn(k), pad_fn ? pad_fn(k) : Rational{7, 3}.floor_mul(k) + 1, adaptive,
                [&](const Graph& sub, const VertexSet& w, int kk) -> std::optional<Split> {
                  auto s = oracle(sub, w, kk);
                  if (!s || static_cast<int>(s->x.size()) > bound) return std::nullopt;
                  int non_empty = 0;
                  for (const auto& side : s->s) non_empty += side.empty() ? 0 : 1;
                  if (non_empty < 2) return std::nullopt;
                  return to_split(std::move(*s));
                });
  return finish(g, k, driver.run(g), clique_bound);
}

}  // namespace

TriangOutcome triang_3way(const Graph& g, int k, Rational alpha, bool adaptive) {
  if (alpha.num < alpha.den) throw std::invalid_argument("alpha must be >= 1");
  const Rational base = two_alpha_plus_one(alpha);
  return run_generic(
      g, k, alpha_sum_oracle(alpha), [alpha](int kk) { return alpha.floor_mul(kk); },
      [base](int kk) { return base.floor_mul(kk); },
      [alpha](int kk) { return kk + alpha.floor_mul(kk) + 1; }, adaptive, base.ceil_mul(k));
}

TriangOutcome triang_generic(const Graph& g, int k, const ThreeWayOracle& oracle,
                             const SizeFn& bound_fn, const SizeFn& base_fn, const SizeFn& pad_fn,
                             bool adaptive) {
  return run_generic(g, k, oracle, bound_fn, base_fn, pad_fn, adaptive,
                     std::numeric_limits<int>::max());
}

ThreeWayOracle alpha_sum_oracle(Rational alpha) {
  return [alpha](const Graph& g, const VertexSet& w, int k) { return alpha_sum_sep(g, w, k, alpha); };
}

ThreeWayOracle bisection_oracle() {
  return [](const Graph& g, const VertexSet& w, int) -> std::optional<ThreeWaySep> {
    if (w.size() < 2) return std::nullopt;
    const Vertex n = g.num_vertices();
    FlowSeparator net(g);
    for (Vertex start : {w[0], w[w.size() - 1]}) {
      std::vector<int> dist(static_cast<std::size_t>(n), std::numeric_limits<int>::max());
      std::queue<Vertex> q;
      dist[start] = 0;
      q.push(start);
      while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex u : g.neighbors(v)) {
          if (dist[u] == std::numeric_limits<int>::max()) {
            dist[u] = dist[v] + 1;
            q.push(u);
          }
        }
      }
      std::vector<Vertex> ordered(w.begin(), w.end());
      std::stable_sort(ordered.begin(), ordered.end(),
                       [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
      const std::size_t half = (ordered.size() + 1) / 2;
      const VertexSet w1(std::vector<Vertex>(ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(half)));
      const VertexSet w2(std::vector<Vertex>(ordered.begin() + static_cast<std::ptrdiff_t>(half), ordered.end()));
      auto cut = net.solve(w1, w2, n);
      if (cut && !cut->side1.empty() && !cut->side2.empty()) {
        return ThreeWaySep{std::move(cut->separator),
                           {std::move(cut->side1), std::move(cut->side2), VertexSet{}}};
      }
    }
    return std::nullopt;
  };
}

EliminationResult eliminate(const Graph& g, const std::vector<Vertex>& order) {
  const Vertex n = g.num_vertices();
  if (order.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("elimination order must list every vertex once");
  }
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0) {
      throw std::invalid_argument("elimination order must list every vertex once");
    }
    pos[v] = static_cast<int>(i);
  }
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  EliminationResult out;
  out.decomposition.bags.resize(static_cast<std::size_t>(n));
  int previous_root = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    const std::vector<Vertex> later(adj[v].begin(), adj[v].end());
    std::vector<Vertex> bag = later;
    bag.push_back(v);
    out.decomposition.bags[i] = VertexSet(std::move(bag));
    for (std::size_t a = 0; a < later.size(); ++a) {
      adj[later[a]].erase(v);
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (adj[later[a]].insert(later[b]).second) {
          adj[later[b]].insert(later[a]);
          out.fill_edges.emplace_back(std::min(later[a], later[b]), std::max(later[a], later[b]));
        }
      }
    }
    if (later.empty()) {
      if (previous_root >= 0) out.decomposition.tree_edges.emplace_back(previous_root, static_cast<int>(i));
      previous_root = static_cast<int>(i);
    } else {
      const Vertex next = *std::min_element(later.begin(), later.end(),
                                            [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
      out.decomposition.tree_edges.emplace_back(static_cast<int>(i), pos[next]);
    }
  }
  std::sort(out.fill_edges.begin(), out.fill_edges.end());
  out.decomposition.width = max_bag_width(out.decomposition.bags);
  return out;
}

TriangSuccess min_degree_triang(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) queue.emplace(adj[v].size(), v);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    order.push_back(v);
    const std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex u : nb) queue.erase({adj[u].size(), u});
    for (Vertex u : nb) adj[u].erase(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        adj[nb[a]].insert(nb[b]);
        adj[nb[b]].insert(nb[a]);
      }
    }
    for (Vertex u : nb) queue.emplace(adj[u].size(), u);
    adj[v].clear();
  }
  EliminationResult elim = eliminate(g, order);
  Triangulation tri = triangulation_from_bags(g, elim.decomposition.bags);
  return {std::move(tri), std::move(elim.decomposition)};
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kRs4: return "rs4";
    case Algorithm::kHalf45: return "half45";
    case Algorithm::kBg367: return "bg367";
    case Algorithm::kMinDegree: return "mindeg";
    case Algorithm::kGeneric: return "generic";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kRs4, Algorithm::kHalf45, Algorithm::kBg367,
                      Algorithm::kMinDegree, Algorithm::kGeneric}) {
    if (algorithm_name(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string DecomposeMode::label() const {
  std::string base = fixed_k ? "fixed" : "search";
  return adaptive ? "adaptive-" + base : base;
}

namespace {

TriangOutcome run_algorithm(const Graph& g, Algorithm algo, int k, bool adaptive, Rational alpha) {
  switch (algo) {
    case Algorithm::kRs4: return triang_2way_23(g, k, adaptive);
    case Algorithm::kHalf45: return triang_2way_half(g, k, adaptive);
    case Algorithm::kBg367: return triang_3way(g, k, alpha, adaptive);
    case Algorithm::kGeneric: {
      const Rational base = two_alpha_plus_one(alpha);
      return triang_generic(
          g, k, bisection_oracle(), [alpha](int kk) { return alpha.floor_mul(kk); },
          [base](int kk) { return base.floor_mul(kk); },
          [alpha](int kk) { return kk + alpha.floor_mul(kk) + 1; }, adaptive);
    }
    case Algorithm::kMinDegree: break;
  }
  throw std::logic_error("run_algorithm called for an elimination heuristic");
}

}  // namespace

DecomposeResult decompose(const Graph& g, Algorithm algo, const DecomposeMode& mode,
                          Rational alpha, std::string graph_name) {
  if (mode.fixed_k && *mode.fixed_k < 1) throw std::invalid_argument("k must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const FlowAudit before = flow_audit();

  DecomposeResult result;
  result.outcome.k = mode.fixed_k.value_or(0);
  RecursionTrace combined;
  bool exceeded = false;
  for (const VertexSet& comp : connected_components(g)) {
    const SubgraphView sub = induced_subgraph(g, comp);
    TreeDecomposition td;
    if (algo == Algorithm::kMinDegree) {
      td = min_degree_triang(sub.graph).decomposition;
    } else if (mode.fixed_k) {
      TriangOutcome o = run_algorithm(sub.graph, algo, *mode.fixed_k, mode.adaptive, alpha);
      if (o.exceeds()) {
        exceeded = true;
        break;
      }
      result.k_used = *mode.fixed_k;
      td = std::move(o.success->decomposition);
    } else {
      for (int k = 1;; ++k) {
        TriangOutcome o = run_algorithm(sub.graph, algo, k, mode.adaptive, alpha);
        if (o.exceeds()) continue;
        result.k_used = std::max(result.k_used, k);
        td = std::move(o.success->decomposition);
        break;
      }
    }
    // Re-root the component decomposition as a trace: bag 0 first, parents
    // from a traversal of its tree edges.
    const int offset = static_cast<int>(combined.size());
    std::vector<std::vector<int>> nbrs(td.bags.size());
    for (const auto& [a, b] : td.tree_edges) {
      nbrs[a].push_back(b);
      nbrs[b].push_back(a);
    }
    std::vector<int> parent(td.bags.size(), -2);
    std::vector<int> order;
    if (!td.bags.empty()) {
      parent[0] = -1;
      order.push_back(0);
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (int nb : nbrs[order[i]]) {
          if (parent[nb] == -2) {
            parent[nb] = order[i];
            order.push_back(nb);
          }
        }
      }
    }
    std::vector<int> new_index(td.bags.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = offset + static_cast<int>(i);
    for (int old : order) {
      combined.push_back({parent[old] < 0 ? -1 : new_index[parent[old]], sub.to_parent_set(td.bags[old])});
    }
  }

  if (exceeded) {
    result.outcome.success.reset();
    result.k_used = *mode.fixed_k;
  } else {
    TreeDecomposition td = assemble_tree_decomposition(combined);
    Triangulation tri = triangulation_from_bags(g, td.bags);
    result.outcome.k = mode.fixed_k.value_or(result.k_used);
    result.outcome.success = TriangSuccess{std::move(tri), std::move(td)};
  }

  const FlowAudit after = flow_audit();
  AlgoReport& r = result.report;
  r.graph_name = std::move(graph_name);
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.algorithm = std::string(algorithm_name(algo));
  r.mode = algo == Algorithm::kMinDegree ? "heuristic" : mode.label();
  r.k_used = result.k_used;
  r.width_plus_one = result.outcome.success ? result.outcome.success->decomposition.width + 1 : 0;
  r.separator_calls = after.calls - before.calls;
  r.flow_augmentations = after.augmentations - before.augmentations;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace twapx
