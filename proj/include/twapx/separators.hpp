#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "twapx/flow.hpp"
#include "twapx/graph.hpp"

namespace twapx {

/// Positive rational used for the alpha parameter of the three-way driver.
struct Rational {
  int num = 4;
  int den = 3;

  /// floor(r * k)
  int floor_mul(int k) const;
  /// ceil(r * k)
  int ceil_mul(int k) const;
  bool operator==(const Rational&) const = default;
};

/// Parses "p/q" or an integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Two-sided split: x, s1, s2 partition the vertices, no s1-s2 edge, both
/// sides non-empty.
struct TwoWaySep {
  VertexSet x;
  VertexSet s1;
  VertexSet s2;
};

/// Three-sided split with at least two non-empty sides.
struct ThreeWaySep {
  VertexSet x;
  std::array<VertexSet, 3> s;
};

/// Visits the r-subsets of {0..n-1} in combinadic (colexicographic) order.
/// The callback returns true to stop early; the function returns whether it
/// was stopped.
bool for_each_combination(int n, int r, const std::function<bool(std::span<const int>)>& visit);

/// Splits with w1 and w2 as terminal groups: a minimum vertex cut between
/// them (terminals removable), accepted when its size is <= bound and both
/// sides are non-empty. Among minimum cuts, one avoiding w1 | w2 is
/// preferred, then the source-minimal, then the sink-minimal one.
std::optional<TwoWaySep> try_split(FlowSeparator& net, const VertexSet& w1,
                                   const VertexSet& w2, int bound);
std::optional<TwoWaySep> try_split(const Graph& g, const VertexSet& w1,
                                   const VertexSet& w2, int bound);

/// First split, in canonical order over W1 (size ceil(|W|/2)) and then W2
/// (size ceil(|W|/3) from W - W1), with separator size <= k. Every side
/// meets at most 2|W|/3 vertices of W. nullopt means no choice succeeded.
std::optional<TwoWaySep> two_thirds_vtx_sep(const Graph& g, const VertexSet& w, int k);

/// First split over W1 of size ceil(|W|/2), W2 = W - W1, with separator
/// size <= floor(1.5k). Each side meets at most ceil(|W|/2) vertices of W.
std::optional<TwoWaySep> two_way_half_vtx_sep(const Graph& g, const VertexSet& w, int k);

/// Alpha-sum separator of W: |(S_i & W) | X| <= floor((1+alpha)k) for every
/// side, at least two sides non-empty.
///
/// Ordered 3-partitions W1, W2, W3 with floor(|W|/2) >= |W1| >= |W2| >= |W3|
/// are tried by (|W1|, |W2|) descending and then combinadic order. When
/// |W1| > k the partition falls back to a two-way split of W1 against
/// W2 | W3 with bound k; otherwise the three groups go through
/// approx_3way_vertex_cut with bound floor(alpha k).
std::optional<ThreeWaySep> alpha_sum_sep(const Graph& g, const VertexSet& w, int k,
                                         Rational alpha = {});

/// True when sep satisfies the alpha-sum condition for W.
bool satisfies_alpha_sum(const ThreeWaySep& sep, const VertexSet& w, int k, Rational alpha);

}  // namespace twapx
