#include "twapx/flow.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace twapx {
namespace {

std::atomic<std::uint64_t> g_calls{0};
std::atomic<std::uint64_t> g_augmentations{0};
std::atomic<std::uint64_t> g_violations{0};

constexpr int kNoParent = -1;

inline int in_node(Vertex v) { return 2 * v; }
inline int out_node(Vertex v) { return 2 * v + 1; }
inline Vertex vertex_of(int node) { return node / 2; }
inline bool is_out(int node) { return (node & 1) != 0; }

}  // namespace

FlowAudit flow_audit() {
  return {g_calls.load(), g_augmentations.load(), g_violations.load()};
}

FlowSeparator::FlowSeparator(const Graph& g) : graph_(&g), n_(g.num_vertices()) {
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + g.degree(v);
  heads_.resize(offsets_.back());
  for (Vertex v = 0; v < n_; ++v) {
    auto nb = g.neighbors(v);
    std::copy(nb.begin(), nb.end(), heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]));
  }
  // Arc index of u -> v given the arc v -> u; adjacency lists are sorted.
  reverse_.resize(heads_.size());
  for (Vertex v = 0; v < n_; ++v) {
    for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
      Vertex u = heads_[e];
      auto first = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
      auto last = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
      reverse_[e] = static_cast<std::size_t>(std::lower_bound(first, last, v) - heads_.begin());
    }
  }
  edge_flow_.assign(heads_.size(), 0);
  vertex_flow_.assign(static_cast<std::size_t>(n_), 0);
  in_a_.assign(static_cast<std::size_t>(n_), 0);
  in_b_.assign(static_cast<std::size_t>(n_), 0);
  seen_.assign(2 * static_cast<std::size_t>(n_), 0);
  parent_node_.assign(2 * static_cast<std::size_t>(n_), kNoParent);
  parent_arc_.assign(2 * static_cast<std::size_t>(n_), 0);
  parent_step_.assign(2 * static_cast<std::size_t>(n_), Step::kSource);
  queue_.reserve(2 * static_cast<std::size_t>(n_));
}

void FlowSeparator::reset() {
  for (std::size_t e : touched_edges_) edge_flow_[e] = 0;
  for (Vertex v : touched_vertices_) vertex_flow_[v] = 0;
  touched_edges_.clear();
  touched_vertices_.clear();
  for (Vertex v : side_a_) in_a_[v] = 0;
  for (Vertex v : side_b_) in_b_[v] = 0;
  side_a_ = {};
  side_b_ = {};
  augmentations_ = 0;
  valid_ = false;
}

// One breadth-first search in the residual network. On success pushes one
// unit along the shortest path found. On failure leaves seen_ == stamp_ on
// exactly the residual-reachable nodes.
bool FlowSeparator::augment() {
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  queue_.clear();
  auto visit = [&](int node, int from, std::size_t arc, Step step) {
    seen_[node] = stamp_;
    parent_node_[node] = from;
    parent_arc_[node] = arc;
    parent_step_[node] = step;
    queue_.push_back(node);
  };
  for (Vertex a : side_a_) {
    if (!is_blocked(a)) visit(in_node(a), kNoParent, 0, Step::kSource);
  }
  int sink_end = -1;
  for (std::size_t head = 0; head < queue_.size() && sink_end < 0; ++head) {
    const int x = queue_[head];
    const Vertex v = vertex_of(x);
    if (!is_out(x)) {
      if (vertex_open(v) && seen_[out_node(v)] != stamp_) {
        visit(out_node(v), x, 0, Step::kVertexForward);
        if (in_b_[v]) { sink_end = out_node(v); break; }
      }
      for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
        const Vertex u = heads_[e];
        const std::size_t back = reverse_[e];  // arc u -> v
        if (edge_flow_[back] > 0 && seen_[out_node(u)] != stamp_) {
          visit(out_node(u), x, back, Step::kEdgeBackward);
          if (in_b_[u]) { sink_end = out_node(u); break; }
        }
      }
    } else {
      for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
        const Vertex u = heads_[e];
        if (!is_blocked(u) && seen_[in_node(u)] != stamp_) {
          visit(in_node(u), x, e, Step::kEdgeForward);
        }
      }
      if (vertex_flow_[v] && seen_[in_node(v)] != stamp_) {
        visit(in_node(v), x, 0, Step::kVertexBackward);
      }
    }
  }
  if (sink_end < 0) return false;

  for (int node = sink_end; parent_step_[node] != Step::kSource; node = parent_node_[node]) {
    switch (parent_step_[node]) {
      case Step::kVertexForward:
        ++vertex_flow_[vertex_of(node)];
        touched_vertices_.push_back(vertex_of(node));
        break;
      case Step::kVertexBackward:
        --vertex_flow_[vertex_of(node)];
        break;
      case Step::kEdgeForward:
        ++edge_flow_[parent_arc_[node]];
        touched_edges_.push_back(parent_arc_[node]);
        break;
      case Step::kEdgeBackward:
        --edge_flow_[parent_arc_[node]];
        break;
      case Step::kSource:
        break;
    }
  }
  return true;
}

std::optional<int> FlowSeparator::max_flow(const VertexSet& side_a, const VertexSet& side_b,
                                           int bound, std::span<const char> blocked,
                                           Terminals terminals, std::span<const char> pinned) {
  if (bound < 0) throw std::invalid_argument("negative separator bound");
  if (!disjoint(side_a, side_b)) throw std::invalid_argument("terminal sides overlap");
  for (const VertexSet* s : {&side_a, &side_b}) {
    if (!s->empty() && ((*s)[0] < 0 || (*s)[s->size() - 1] >= n_)) {
      throw std::out_of_range("terminal vertex outside graph");
    }
  }
  for (std::span<const char> mask : {blocked, pinned}) {
    if (!mask.empty() && mask.size() != static_cast<std::size_t>(n_)) {
      throw std::invalid_argument("vertex mask size mismatch");
    }
  }
  reset();
  side_a_ = side_a;
  side_b_ = side_b;
  blocked_ = blocked;
  pinned_ = pinned;
  fixed_a_ = terminals == Terminals::kFixed || terminals == Terminals::kFixedSource;
  fixed_b_ = terminals == Terminals::kFixed || terminals == Terminals::kFixedSink;
  for (Vertex v : side_a_) in_a_[v] = 1;
  for (Vertex v : side_b_) in_b_[v] = 1;

  bool exceeded = false;
  while (augment()) {
    ++augmentations_;
    if (augmentations_ > bound) {
      exceeded = true;
      break;
    }
  }
  g_calls.fetch_add(1, std::memory_order_relaxed);
  g_augmentations.fetch_add(static_cast<std::uint64_t>(augmentations_), std::memory_order_relaxed);
  if (augmentations_ > bound + 1) g_violations.fetch_add(1, std::memory_order_relaxed);
  if (exceeded) return std::nullopt;
  valid_ = true;
  return augmentations_;
}

CutResult FlowSeparator::extract_cut(CutSide side) const {
  if (!valid_) throw std::logic_error("extract_cut without a completed flow");
  std::vector<Vertex> sep;
  std::vector<Vertex> s1;
  std::vector<Vertex> s2;
  if (side == CutSide::kSourceMinimal) {
    // seen_ == stamp_ marks the residual-reachable set of the failed search.
    for (Vertex v = 0; v < n_; ++v) {
      if (is_blocked(v)) continue;
      const bool in_r = seen_[in_node(v)] == stamp_;
      const bool out_r = seen_[out_node(v)] == stamp_;
      if (out_r) s1.push_back(v);
      else if (in_r) sep.push_back(v);
      else s2.push_back(v);
    }
  } else {
    // Nodes that reach the sink in the residual network, by reverse search.
    std::vector<char> reach(2 * static_cast<std::size_t>(n_), 0);
    std::vector<int> stack;
    for (Vertex b : side_b_) {
      if (is_blocked(b)) continue;
      reach[out_node(b)] = 1;
      stack.push_back(out_node(b));
    }
    auto push = [&](int node) {
      if (!reach[node]) {
        reach[node] = 1;
        stack.push_back(node);
      }
    };
    while (!stack.empty()) {
      const int y = stack.back();
      stack.pop_back();
      const Vertex v = vertex_of(y);
      if (is_out(y)) {
        if (vertex_open(v)) push(in_node(v));
        for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
          // in(u) -> out(v) is residual when out(v) -> in(u) carries flow.
          if (edge_flow_[e] > 0) push(in_node(heads_[e]));
        }
      } else {
        for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
          if (!is_blocked(heads_[e])) push(out_node(heads_[e]));
        }
        if (vertex_flow_[v]) push(out_node(v));
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (is_blocked(v)) continue;
      if (reach[in_node(v)]) s2.push_back(v);
      else if (reach[out_node(v)]) sep.push_back(v);
      else s1.push_back(v);
    }
  }
  return {VertexSet(std::move(sep)), VertexSet(std::move(s1)), VertexSet(std::move(s2))};
}

std::vector<std::vector<Vertex>> FlowSeparator::flow_paths() const {
  if (!valid_) throw std::logic_error("flow_paths without a completed flow");
  // Net flow per arc; opposite units on an edge cancel.
  std::vector<int> remaining(edge_flow_.size(), 0);
  for (std::size_t e = 0; e < edge_flow_.size(); ++e) {
    remaining[e] = std::max(0, edge_flow_[e] - edge_flow_[reverse_[e]]);
  }
  auto net_out = [&](Vertex v) {
    int d = 0;
    for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) d += remaining[e] - remaining[reverse_[e]];
    return d;
  };
  std::vector<std::vector<Vertex>> paths;
  for (Vertex a : side_a_) {
    for (int units = net_out(a); units > 0; --units) {
      std::vector<Vertex> path{a};
      Vertex v = a;
      while (!in_b_[v]) {
        std::size_t next = offsets_[v + 1];
        for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
          if (remaining[e] > 0) { next = e; break; }
        }
        if (next == offsets_[v + 1]) throw std::logic_error("flow is not conserved");
        --remaining[next];
        v = heads_[next];
        path.push_back(v);
      }
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

std::optional<CutResult> FlowSeparator::solve(const VertexSet& side_a, const VertexSet& side_b,
                                              int bound, CutSide side,
                                              std::span<const char> blocked,
                                              Terminals terminals) {
  if (!max_flow(side_a, side_b, bound, blocked, terminals)) return std::nullopt;
  return extract_cut(side);
}

std::optional<CutResult> min_vertex_separator(const Graph& g, const TerminalSpec& t, int bound,
                                              Terminals terminals) {
  FlowSeparator net(g);
  return net.solve(t.side_a, t.side_b, bound, CutSide::kSourceMinimal, {}, terminals);
}

ThreeWayCut sides_from_separator(const Graph& g, const VertexSet& separator,
                                 const std::array<VertexSet, 3>& groups) {
  std::vector<int> group_of(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int i = 0; i < 3; ++i) {
    for (Vertex v : groups[i]) group_of[v] = i;
  }
  std::array<std::vector<Vertex>, 3> sides;
  for (const VertexSet& comp : connected_components(g, separator)) {
    int owner = -1;
    for (Vertex v : comp) {
      const int gi = group_of[v];
      if (gi < 0) continue;
      if (owner >= 0 && owner != gi) {
        throw std::logic_error("separator leaves two terminal groups connected");
      }
      owner = gi;
    }
    auto& dst = sides[owner < 0 ? 2 : owner];
    dst.insert(dst.end(), comp.begin(), comp.end());
  }
  ThreeWayCut out;
  out.separator = separator;
  for (int i = 0; i < 3; ++i) out.sides[i] = VertexSet(std::move(sides[i]));
  return out;
}

std::optional<ThreeWayCut> approx_3way_vertex_cut(FlowSeparator& net,
                                                  const std::array<VertexSet, 3>& groups,
                                                  int bound) {
  if (bound < 0) throw std::invalid_argument("negative separator bound");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!disjoint(groups[i], groups[j])) throw std::invalid_argument("terminal groups overlap");
    }
  }
  const Graph& g = net.graph();
  constexpr std::array<CutSide, 2> kSides{CutSide::kSourceMinimal, CutSide::kSinkMinimal};

  // isolating[i][s]: cut isolating group i from the other two, or nullopt
  // when it exceeds bound.
  std::array<std::array<std::optional<VertexSet>, 2>, 3> isolating;
  for (int i = 0; i < 3; ++i) {
    const VertexSet rest = set_union(groups[(i + 1) % 3], groups[(i + 2) % 3]);
    if (groups[i].empty() || rest.empty()) {
      isolating[i] = {VertexSet{}, VertexSet{}};
      continue;
    }
    if (!net.max_flow(groups[i], rest, bound)) continue;
    for (int s = 0; s < 2; ++s) isolating[i][s] = net.extract_cut(kSides[s]).separator;
  }

  std::optional<VertexSet> best;
  auto consider = [&](VertexSet x) {
    if (x.size() <= static_cast<std::size_t>(bound) && (!best || x.size() < best->size())) {
      best = std::move(x);
    }
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (int si = 0; si < 2; ++si) {
        for (int sj = 0; sj < 2; ++sj) {
          if (isolating[i][si] && isolating[j][sj]) {
            consider(set_union(*isolating[i][si], *isolating[j][sj]));
          }
        }
      }
    }
  }
  std::vector<char> blocked(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int i = 0; i < 3; ++i) {
    for (int s = 0; s < 2; ++s) {
      if (!isolating[i][s]) continue;
      const VertexSet& first = *isolating[i][s];
      const int remaining_bound = bound - static_cast<int>(first.size());
      if (remaining_bound < 0) continue;
      if (best && first.size() >= best->size()) continue;
      const VertexSet a = set_difference(groups[(i + 1) % 3], first);
      const VertexSet b = set_difference(groups[(i + 2) % 3], first);
      if (a.empty() || b.empty()) {
        consider(first);
        continue;
      }
      for (Vertex v : first) blocked[v] = 1;
      auto flow = net.max_flow(a, b, remaining_bound, blocked);
      if (flow) consider(set_union(first, net.extract_cut().separator));
      for (Vertex v : first) blocked[v] = 0;
    }
  }
  if (!best) return std::nullopt;
  return sides_from_separator(g, *best, groups);
}

std::optional<ThreeWayCut> approx_3way_vertex_cut(const Graph& g, const VertexSet& t1,
                                                  const VertexSet& t2, const VertexSet& t3,
                                                  int bound) {
  FlowSeparator net(g);
  return approx_3way_vertex_cut(net, {t1, t2, t3}, bound);
}

}  // namespace twapx
