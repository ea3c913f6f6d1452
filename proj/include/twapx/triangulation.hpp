#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twapx/decomposition.hpp"
#include "twapx/graph.hpp"
#include "twapx/separators.hpp"

namespace twapx {

struct TriangSuccess {
  Triangulation triangulation;
  TreeDecomposition decomposition;
};

/// Either a triangulation with its decomposition, or the certified answer
/// "the treewidth exceeds k - 1".
struct TriangOutcome {
  int k = 0;
  std::optional<TriangSuccess> success;

  bool exceeds() const { return !success.has_value(); }
};

/// One recursive call: its bag (W | X, or the whole vertex set in the base
/// case) in top-level ids and the index of the calling node (-1 at roots).
struct TraceNode {
  int parent = -1;
  VertexSet bag;
};

using RecursionTrace = std::vector<TraceNode>;

/// One bag per trace node, tree edges along parent links. Several roots
/// (disconnected inputs) are chained root to root.
TreeDecomposition assemble_tree_decomposition(const RecursionTrace& trace);

/// base plus a clique on every bag, certified by maximum cardinality search.
/// Throws std::logic_error if the result is not chordal.
Triangulation triangulation_from_bags(const Graph& base, const std::vector<VertexSet>& bags);

/// Factor-4 driver with 2/3-separators: base case n <= 4k, W' padded to
/// 3k+2, separators of size <= k. Success implies clique number <= 4k+1.
/// With `adaptive`, W' grows one vertex at a time from |W| (at least 2)
/// and the first size that yields a split is used; only the full size
/// certifies failure.
TriangOutcome triang_2way_23(const Graph& g, int k, bool adaptive = false);

/// Factor-4.5 driver with two-way 1/2-separators of size <= floor(1.5k).
/// Success implies clique number <= floor(4.5k) + 2.
TriangOutcome triang_2way_half(const Graph& g, int k, bool adaptive = false);

/// Three-way driver with alpha-sum separators: base case
/// n <= floor((2 alpha + 1) k), W' padded to floor((1 + alpha) k) + 1.
/// Success implies clique number <= ceil((2 alpha + 1) k).
TriangOutcome triang_3way(const Graph& g, int k, Rational alpha = {}, bool adaptive = false);

/// Separator procedure plugged into triang_generic: (graph, W', k).
using ThreeWayOracle =
    std::function<std::optional<ThreeWaySep>(const Graph&, const VertexSet&, int)>;
using SizeFn = std::function<int(int)>;

/// The three-way recursion with a caller-supplied separator. A separator
/// larger than bound_fn(k), a missing one, or one with fewer than two
/// non-empty sides ends the run with Exceeds. pad_fn(k) is the target |W'|;
/// by default floor(7k/3) + 1.
TriangOutcome triang_generic(const Graph& g, int k, const ThreeWayOracle& oracle,
                             const SizeFn& bound_fn, const SizeFn& base_fn,
                             const SizeFn& pad_fn = {}, bool adaptive = false);

/// alpha_sum_sep as an oracle.
ThreeWayOracle alpha_sum_oracle(Rational alpha = {});

/// Heuristic oracle: orders W by breadth-first distance from its first
/// vertex, cuts the first half from the second with an unbounded minimum
/// vertex cut, then retries from the last vertex. No size guarantee.
ThreeWayOracle bisection_oracle();

/// Elimination in the given order: fill edges plus the decomposition with
/// bag {v} + later neighbors for each v, attached to the bag of its
/// earliest-eliminated later neighbor.
struct EliminationResult {
  std::vector<Edge> fill_edges;
  TreeDecomposition decomposition;
};
EliminationResult eliminate(const Graph& g, const std::vector<Vertex>& order);

/// Minimum-degree elimination, ties broken by smallest id.
TriangSuccess min_degree_triang(const Graph& g);

enum class Algorithm { kRs4, kHalf45, kBg367, kMinDegree, kGeneric };

std::string_view algorithm_name(Algorithm a);
/// Accepts rs4, half45, bg367, mindeg, generic. Throws std::invalid_argument.
Algorithm parse_algorithm(std::string_view name);

/// fixed_k set: one run at that k. Unset: linear search from k = 1 for the
/// least k that succeeds. adaptive selects the growing-W' variant.
struct DecomposeMode {
  std::optional<int> fixed_k;
  bool adaptive = false;

  std::string label() const;
};

/// One benchmark row; width_plus_one follows the "Width+1" reporting
/// convention.
struct AlgoReport {
  std::string graph_name;
  Vertex n = 0;
  std::size_t m = 0;
  std::string algorithm;
  std::string mode;
  int k_used = 0;
  int width_plus_one = 0;
  std::uint64_t separator_calls = 0;
  std::uint64_t flow_augmentations = 0;
  double wall_ms = 0.0;
};

struct DecomposeResult {
  int k_used = 0;
  TriangOutcome outcome;
  AlgoReport report;
};

/// Runs an algorithm on every connected component and joins the component
/// decompositions root to root. k_used is the largest k any component
/// needed (0 for mindeg). In fixed-k mode one exceeding component makes the
/// whole outcome Exceeds.
DecomposeResult decompose(const Graph& g, Algorithm algo, const DecomposeMode& mode,
                          Rational alpha = {}, std::string graph_name = "graph");

}  // namespace twapx
