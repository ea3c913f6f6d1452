#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twapx/graph.hpp"

namespace twapx {

/// Attachment sets of the two super-terminals.
struct TerminalSpec {
  VertexSet side_a;
  VertexSet side_b;
};

/// Two-sided vertex cut: separator, side1 and side2 partition the vertices
/// and no edge joins side1 to side2.
struct CutResult {
  VertexSet separator;
  VertexSet side1;
  VertexSet side2;
};

/// Three-sided vertex cut. sides[i] holds the component(s) touching group i;
/// components touching no group are placed in sides[2].
struct ThreeWayCut {
  VertexSet separator;
  std::array<VertexSet, 3> sides;
};

/// Whether terminal vertices may themselves be cut. kRemovable gives every
/// vertex capacity 1 (the separator may contain attachment vertices);
/// kFixed gives terminals unbounded capacity, so adjacent terminals of
/// opposite sides are inseparable. kFixedSource and kFixedSink fix one side.
enum class Terminals { kRemovable, kFixed, kFixedSource, kFixedSink };

/// Which minimum cut to report when several exist.
enum class CutSide {
  kSourceMinimal,  // frontier of the residual-reachable set from the source
  kSinkMinimal,    // frontier of the set that reaches the sink
};

/// Process-wide flow instrumentation.
struct FlowAudit {
  std::uint64_t calls = 0;
  std::uint64_t augmentations = 0;
  /// Calls whose augmentation count exceeded bound + 1. Always zero unless
  /// the early exit is broken.
  std::uint64_t bound_violations = 0;
};

FlowAudit flow_audit();

/// Unit vertex-capacity flow network over a fixed graph, reusable across
/// terminal choices. Vertex v splits into in(v) -> out(v) with capacity 1;
/// each edge {u, v} becomes out(u) -> in(v) and out(v) -> in(u) with
/// unbounded capacity. The super-source feeds in(a) for every a in side_a
/// and out(b) drains into the super-sink for every b in side_b, both
/// uncapacitated. Cliquing a terminal group is therefore implicit.
///
/// Not thread-safe; use one instance per task.
class FlowSeparator {
public:
  explicit FlowSeparator(const Graph& g);

  const Graph& graph() const { return *graph_; }

  /// Maximum flow from side_a to side_b, stopping after bound + 1
  /// augmentations. Returns nullopt when the flow exceeds bound. Vertices
  /// with a nonzero entry in `blocked` are treated as deleted; terminals
  /// with a nonzero entry in `pinned` are fixed regardless of `terminals`.
  std::optional<int> max_flow(const VertexSet& side_a, const VertexSet& side_b,
                              int bound, std::span<const char> blocked = {},
                              Terminals terminals = Terminals::kRemovable,
                              std::span<const char> pinned = {});

  /// Cut of the last successful max_flow. Blocked vertices are omitted.
  CutResult extract_cut(CutSide side = CutSide::kSourceMinimal) const;

  /// Vertex-disjoint side_a -> side_b paths carried by the last flow.
  std::vector<std::vector<Vertex>> flow_paths() const;

  int last_augmentations() const { return augmentations_; }

  /// max_flow followed by extract_cut.
  std::optional<CutResult> solve(const VertexSet& side_a, const VertexSet& side_b,
                                 int bound, CutSide side = CutSide::kSourceMinimal,
                                 std::span<const char> blocked = {},
                                 Terminals terminals = Terminals::kRemovable);

private:
  enum class Step : std::uint8_t { kSource, kVertexForward, kVertexBackward, kEdgeForward, kEdgeBackward };

  bool augment();
  void reset();
  bool is_blocked(Vertex v) const { return !blocked_.empty() && blocked_[v]; }
  // in(v) -> out(v) still has residual capacity.
  bool vertex_open(Vertex v) const {
    return vertex_flow_[v] == 0 || (fixed_a_ && in_a_[v]) || (fixed_b_ && in_b_[v]) ||
           (!pinned_.empty() && pinned_[v] && (in_a_[v] || in_b_[v]));
  }

  const Graph* graph_;
  Vertex n_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> heads_;
  std::vector<std::size_t> reverse_;

  std::vector<int> edge_flow_;
  std::vector<int> vertex_flow_;
  std::vector<std::size_t> touched_edges_;
  std::vector<Vertex> touched_vertices_;

  std::vector<char> in_a_;
  std::vector<char> in_b_;
  VertexSet side_a_;
  VertexSet side_b_;
  std::span<const char> blocked_;
  std::span<const char> pinned_;
  bool fixed_a_ = false;
  bool fixed_b_ = false;

  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<int> parent_node_;
  std::vector<std::size_t> parent_arc_;
  std::vector<Step> parent_step_;
  std::vector<int> queue_;

  int augmentations_ = 0;
  bool valid_ = false;
};

/// Minimum super-terminal vertex separator of size <= bound, or nullopt when
/// the minimum exceeds bound (or, with fixed terminals, when two terminals
/// of opposite sides are adjacent). Throws std::invalid_argument on
/// overlapping sides or negative bound.
std::optional<CutResult> min_vertex_separator(const Graph& g, const TerminalSpec& t, int bound,
                                              Terminals terminals = Terminals::kFixed);

/// Three-terminal-group vertex cut built from isolating cuts: the minimum
/// over unions of two isolating cuts (each taken as the source- or
/// sink-minimal cut) and over sequential cuts (one isolating cut, then a
/// two-way cut of the remaining groups in what is left). The plain union of
/// the two cheapest isolating cuts is among the candidates. Returns nullopt
/// when the best candidate exceeds bound.
std::optional<ThreeWayCut> approx_3way_vertex_cut(FlowSeparator& net,
                                                  const std::array<VertexSet, 3>& groups,
                                                  int bound);

std::optional<ThreeWayCut> approx_3way_vertex_cut(const Graph& g, const VertexSet& t1,
                                                  const VertexSet& t2, const VertexSet& t3,
                                                  int bound);

/// Assigns the components of g - separator to the groups they touch.
/// Throws std::logic_error if a component touches two groups.
ThreeWayCut sides_from_separator(const Graph& g, const VertexSet& separator,
                                 const std::array<VertexSet, 3>& groups);

}  // namespace twapx
