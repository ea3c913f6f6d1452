#include "twapx/separators.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twapx {
namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

VertexSet pick(const VertexSet& from, std::span<const int> idx) {
  std::vector<Vertex> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(from[static_cast<std::size_t>(i)]);
  return VertexSet(std::move(out));
}

void check_request(const Graph& g, const VertexSet& w, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (!w.empty() && (w[0] < 0 || w[w.size() - 1] >= g.num_vertices())) {
    throw std::out_of_range("W outside vertex range");
  }
}

std::size_t meet(const VertexSet& side, const VertexSet& w) {
  return set_intersection(side, w).size();
}

void check_two_way(const Graph& g, const TwoWaySep& s) {
  if (s.s1.empty() || s.s2.empty()) throw std::logic_error("two-way split with an empty side");
  if (s.x.size() + s.s1.size() + s.s2.size() != static_cast<std::size_t>(g.num_vertices()) ||
      !disjoint(s.x, s.s1) || !disjoint(s.x, s.s2) || !disjoint(s.s1, s.s2)) {
    throw std::logic_error("two-way split is not a partition");
  }
  for (Vertex u : s.s1) {
    for (Vertex v : g.neighbors(u)) {
      if (s.s2.contains(v)) throw std::logic_error("edge crosses a two-way split");
    }
  }
}

}  // namespace

int Rational::floor_mul(int k) const {
  return static_cast<int>(floor_div(static_cast<long long>(num) * k, den));
}

int Rational::ceil_mul(int k) const {
  return static_cast<int>(-floor_div(-static_cast<long long>(num) * k, den));
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return value;
  };
  Rational r;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r = {parse_int(text), 1};
  } else {
    r = {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  }
  if (r.den <= 0 || r.num <= 0) {
    throw std::invalid_argument("rational must be positive: '" + std::string(text) + "'");
  }
  const int g = std::gcd(r.num, r.den);
  return {r.num / g, r.den / g};
}

bool for_each_combination(int n, int r, const std::function<bool(std::span<const int>)>& visit) {
  if (r < 0 || r > n) return false;
  std::vector<int> c(static_cast<std::size_t>(r));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (visit(c)) return true;
    // Colex successor: bump the lowest position that has room.
    int i = 0;
    while (i < r && c[i] + 1 == (i + 1 < r ? c[i + 1] : n)) ++i;
    if (i == r) return false;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
}

namespace {

// Sides of g - x: components meeting w1 form side 1, the rest side 2. When
// w1 lies inside x, a component meeting neither w1 nor w2 becomes side 1.
// nullopt when no split with two non-empty sides results.
std::optional<TwoWaySep> split_by_components(const Graph& g, const VertexSet& x,
                                             const VertexSet& w1, const VertexSet& w2) {
  const auto comps = connected_components(g, x);
  if (comps.size() < 2) return std::nullopt;
  std::vector<Vertex> s1;
  std::vector<Vertex> s2;
  for (const VertexSet& c : comps) {
    if (!set_intersection(c, w1).empty()) s1.insert(s1.end(), c.begin(), c.end());
  }
  std::size_t chosen = comps.size();
  if (s1.empty()) {
    for (std::size_t i = 0; i < comps.size() && chosen == comps.size(); ++i) {
      if (set_intersection(comps[i], w2).empty()) chosen = i;
    }
    if (chosen == comps.size()) return std::nullopt;
    s1.assign(comps[chosen].begin(), comps[chosen].end());
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i != chosen && set_intersection(comps[i], w1).empty()) {
      s2.insert(s2.end(), comps[i].begin(), comps[i].end());
    }
  }
  if (s2.empty()) return std::nullopt;
  return TwoWaySep{x, VertexSet(std::move(s1)), VertexSet(std::move(s2))};
}

}  // namespace

std::optional<TwoWaySep> try_split(FlowSeparator& net, const VertexSet& w1,
                                   const VertexSet& w2, int bound) {
  if (!disjoint(w1, w2)) throw std::invalid_argument("try_split: W1 and W2 overlap");
  if (w1.empty() || w2.empty()) return std::nullopt;
  const auto r = net.max_flow(w1, w2, bound);
  if (!r) return std::nullopt;
  const Graph& g = net.graph();
  const VertexSet terminals = set_union(w1, w2);
  // Several minimum cuts exist in general. Prefer one avoiding the
  // terminals, then the source- and sink-minimal ones; sides come from the
  // components of g - X so that stray components can fill an empty side.
  const VertexSet source_min = net.extract_cut(CutSide::kSourceMinimal).separator;
  const VertexSet sink_min = net.extract_cut(CutSide::kSinkMinimal).separator;
  std::optional<TwoWaySep> out;
  if (!disjoint(source_min, terminals)) {
    for (Terminals t : {Terminals::kFixed, Terminals::kFixedSource, Terminals::kFixedSink}) {
      if (auto inner = net.solve(w1, w2, *r, CutSide::kSourceMinimal, {}, t)) {
        out = split_by_components(g, inner->separator, w1, w2);
      }
      if (out) break;
    }
  }
  if (!out) out = split_by_components(g, source_min, w1, w2);
  if (!out && sink_min != source_min) out = split_by_components(g, sink_min, w1, w2);
  // A usable cut keeping some u in w1 and v in w2 is found by pinning them.
  if (!out && !disjoint(source_min, terminals)) {
    std::vector<char> pinned(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex u : w1) {
      for (Vertex v : w2) {
        if (g.has_edge(u, v)) continue;
        pinned[u] = pinned[v] = 1;
        const auto f = net.max_flow(w1, w2, *r, {}, Terminals::kRemovable, pinned);
        pinned[u] = pinned[v] = 0;
        if (f) out = split_by_components(g, net.extract_cut().separator, w1, w2);
        if (out) break;
      }
      if (out) break;
    }
  }
  if (out) check_two_way(g, *out);
  return out;
}

std::optional<TwoWaySep> try_split(const Graph& g, const VertexSet& w1, const VertexSet& w2,
                                   int bound) {
  FlowSeparator net(g);
  return try_split(net, w1, w2, bound);
}

std::optional<TwoWaySep> two_thirds_vtx_sep(const Graph& g, const VertexSet& w, int k) {
  check_request(g, w, k);
  const int size = static_cast<int>(w.size());
  const int r1 = ceil_div(size, 2);
  const int r2 = ceil_div(size, 3);
  FlowSeparator net(g);
  std::optional<TwoWaySep> found;
  for_each_combination(size, r1, [&](std::span<const int> idx1) {
    const VertexSet w1 = pick(w, idx1);
    const VertexSet rest = set_difference(w, w1);
    return for_each_combination(static_cast<int>(rest.size()), r2, [&](std::span<const int> idx2) {
      found = try_split(net, w1, pick(rest, idx2), k);
      return found.has_value();
    });
  });
  if (found) {
    for (const VertexSet* side : {&found->s1, &found->s2}) {
      if (3 * meet(*side, w) > 2 * w.size()) throw std::logic_error("2/3 balance violated");
    }
  }
  return found;
}

std::optional<TwoWaySep> two_way_half_vtx_sep(const Graph& g, const VertexSet& w, int k) {
  check_request(g, w, k);
  const int size = static_cast<int>(w.size());
  const int bound = Rational{3, 2}.floor_mul(k);
  FlowSeparator net(g);
  std::optional<TwoWaySep> found;
  for_each_combination(size, ceil_div(size, 2), [&](std::span<const int> idx) {
    const VertexSet w1 = pick(w, idx);
    found = try_split(net, w1, set_difference(w, w1), bound);
    return found.has_value();
  });
  if (found) {
    for (const VertexSet* side : {&found->s1, &found->s2}) {
      if (meet(*side, w) > static_cast<std::size_t>(ceil_div(size, 2))) {
        throw std::logic_error("1/2 balance violated");
      }
    }
  }
  return found;
}

bool satisfies_alpha_sum(const ThreeWaySep& sep, const VertexSet& w, int k, Rational alpha) {
  const std::size_t limit = static_cast<std::size_t>(k + alpha.floor_mul(k));
  int non_empty = 0;
  for (const VertexSet& side : sep.s) {
    if (!side.empty()) ++non_empty;
    if (set_union(set_intersection(side, w), sep.x).size() > limit) return false;
  }
  return non_empty >= 2;
}

std::optional<ThreeWaySep> alpha_sum_sep(const Graph& g, const VertexSet& w, int k,
                                         Rational alpha) {
  check_request(g, w, k);
  if (alpha.num < alpha.den) throw std::invalid_argument("alpha must be >= 1");
  const int size = static_cast<int>(w.size());
  const int three_way_bound = alpha.floor_mul(k);
  FlowSeparator net(g);
  std::optional<ThreeWaySep> found;

  for (int a = size / 2; a >= 0 && !found; --a) {
    for (int b = std::min(a, size - a); b >= 0 && !found; --b) {
      const int c = size - a - b;
      if (c > b || c < 0) continue;
      const bool fallback = a > k;
      for_each_combination(size, a, [&](std::span<const int> idx1) {
        const VertexSet w1 = pick(w, idx1);
        const VertexSet rest = set_difference(w, w1);
        if (fallback) {
          // W2 | W3 is the same set for every split of the rest.
          auto two = try_split(net, w1, rest, k);
          if (two) {
            ThreeWaySep sep{std::move(two->x), {std::move(two->s1), std::move(two->s2), VertexSet{}}};
            if (satisfies_alpha_sum(sep, w, k, alpha)) found = std::move(sep);
          }
          return found.has_value();
        }
        return for_each_combination(static_cast<int>(rest.size()), b, [&](std::span<const int> idx2) {
          const VertexSet w2 = pick(rest, idx2);
          const VertexSet w3 = set_difference(rest, w2);
          auto cut = approx_3way_vertex_cut(net, {w1, w2, w3}, three_way_bound);
          if (!cut) return false;
          ThreeWaySep sep{std::move(cut->separator), std::move(cut->sides)};
          if (satisfies_alpha_sum(sep, w, k, alpha)) found = std::move(sep);
          return found.has_value();
        });
      });
      // A fallback partition ignores b, so one pass over W1 covers every b.
      if (fallback) break;
    }
  }
  return found;
}

}  // namespace twapx
