#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twapx/decomposition.hpp"
#include "twapx/flow.hpp"
#include "twapx/graph.hpp"

namespace twapx {

/// Chordless cycle of length >= 4, listed in cycle order.
struct NotChordal {
  std::vector<Vertex> cycle;
};

using ChordalityCertificate = std::variant<EliminationOrdering, NotChordal>;

/// Maximum cardinality search, then a later-neighbor clique test on the
/// reversed visit order. A failing graph yields a chordless cycle.
ChordalityCertificate is_chordal(const Graph& g);

/// True when `order` is a permutation of g's vertices and a perfect
/// elimination ordering.
bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& order);

/// Max over positions of 1 + number of later neighbors. Throws
/// std::invalid_argument when `peo` is not a perfect elimination ordering.
int clique_number_chordal(const Graph& g, const EliminationOrdering& peo);

enum class ViolationKind {
  kBagVertexOutOfRange,
  kVertexUncovered,      // condition (1)
  kEdgeUncovered,        // condition (2)
  kSubtreeDisconnected,  // condition (3)
  kNotATree,
  kWidthMismatch,
};

struct Violation {
  ViolationKind kind;
  Vertex vertex = -1;
  Edge edge{-1, -1};
  int bag = -1;
  std::string message;
};

/// Checks vertex coverage, edge coverage, the connected-subtree condition,
/// tree shape of tree_edges and the stored width. Empty result means valid.
std::vector<Violation> check_tree_decomposition(const Graph& g, const TreeDecomposition& td);

inline constexpr Vertex kMaxExactTreewidthVertices = 14;
inline constexpr Vertex kMaxBruteForceVertices = 10;

/// Exact treewidth by dynamic programming over vertex subsets
/// (TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)). Throws
/// std::invalid_argument above kMaxExactTreewidthVertices. Empty graph: -1.
int exact_treewidth(const Graph& g);

/// Minimum |X| such that side_a - X and side_b - X are disconnected in
/// g - X, by subset enumeration, under the same terminal semantics as
/// FlowSeparator: with kFixed, X avoids both sides and adjacent terminals of
/// opposite sides give nullopt (inseparable). Throws above
/// kMaxBruteForceVertices.
std::optional<int> brute_force_min_separator(const Graph& g, const TerminalSpec& t,
                                             Terminals terminals = Terminals::kFixed);

/// Minimum |X| leaving the three groups pairwise disconnected in g - X.
int brute_force_min_multiway_cut(const Graph& g, const std::array<VertexSet, 3>& groups);

}  // namespace twapx
