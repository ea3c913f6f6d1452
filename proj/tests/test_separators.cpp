#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "twapx/generators.hpp"
#include "twapx/separators.hpp"
#include "twapx/validation.hpp"

using namespace twapx;

namespace {

std::size_t meet(const VertexSet& side, const VertexSet& w) { return set_intersection(side, w).size(); }

VertexSet random_subset(Vertex n, int size, std::mt19937_64& rng) {
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(static_cast<std::size_t>(std::min<Vertex>(n, size)));
  return VertexSet(ids);
}

void check_two_way(const Graph& g, const TwoWaySep& s) {
  CHECK(s.x.size() + s.s1.size() + s.s2.size() == static_cast<std::size_t>(g.num_vertices()));
  CHECK_FALSE(s.s1.empty());
  CHECK_FALSE(s.s2.empty());
  for (Vertex u : s.s1)
    for (Vertex v : g.neighbors(u)) CHECK_FALSE(s.s2.contains(v));
}

// Some separator of the given size leaves at least two components, so a
// split with non-empty sides exists.
bool usable_cut_exists(const Graph& g, const VertexSet& w1, const VertexSet& w2, int size) {
  const Vertex n = g.num_vertices();
  bool found = false;
  for_each_combination(n, size, [&](std::span<const int> idx) {
    VertexSet x(std::vector<Vertex>(idx.begin(), idx.end()));
    auto comps = connected_components(g, x);
    if (comps.size() < 2) return false;
    int meets_w1 = 0;
    int meets_neither = 0;
    for (const VertexSet& c : comps) {
      const bool a = !set_intersection(c, w1).empty();
      const bool b = !set_intersection(c, w2).empty();
      if (a && b) return false;
      meets_w1 += a;
      meets_neither += !a && !b;
    }
    const int total = static_cast<int>(comps.size());
    found = meets_w1 > 0 ? meets_w1 < total : meets_neither > 0;
    return found;
  });
  return found;
}

}  // namespace

TEST_CASE("rational") {
  CHECK(parse_rational("4/3") == Rational{4, 3});
  CHECK(parse_rational("8/6") == Rational{4, 3});
  CHECK(parse_rational("2") == Rational{2, 1});
  CHECK_THROWS_AS(parse_rational("0/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  Rational a{4, 3};
  CHECK(a.floor_mul(2) == 2);
  CHECK(a.ceil_mul(2) == 3);
  CHECK(a.floor_mul(3) == 4);
  CHECK(Rational{11, 3}.ceil_mul(2) == 8);
}

TEST_CASE("combinations in colex order") {
  std::vector<std::vector<int>> seen;
  for_each_combination(4, 2, [&](std::span<const int> c) {
    seen.emplace_back(c.begin(), c.end());
    return false;
  });
  CHECK(seen == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  int count = 0;
  CHECK(for_each_combination(6, 3, [&](std::span<const int>) { return ++count == 5; }));
  CHECK(count == 5);
  count = 0;
  CHECK_FALSE(for_each_combination(5, 0, [&](std::span<const int> c) { return ++count, !c.empty(); }));
  CHECK(count == 1);
}

TEST_CASE("try_split") {
  SUBCASE("P5 bottleneck") {
    auto s = try_split(path_graph(5), {0, 1}, {3, 4}, 1);
    REQUIRE(s);
    CHECK(s->x == VertexSet{2});
    CHECK(s->s1 == VertexSet{0, 1});
    CHECK(s->s2 == VertexSet{3, 4});
  }
  SUBCASE("clique has no separator") {
    Graph k6 = complete_graph(6);
    CHECK_FALSE(try_split(k6, {0}, {1}, 5));
    CHECK_FALSE(try_split(k6, {0, 2}, {1, 5}, 5));
  }
  SUBCASE("minimum against brute force, implicit clique equals explicit") {
    std::mt19937_64 rng(5);
    int successes = 0;
    for (int rep = 0; rep < 150; ++rep) {
      const Vertex n = 5 + rep % 6;
      Graph g = random_connected(n, 0.3, rng);
      VertexSet both = random_subset(n, 2 + rep % 4, rng);
      const std::size_t half = both.size() / 2;
      VertexSet w1(std::vector<Vertex>(both.begin(), both.begin() + static_cast<std::ptrdiff_t>(half)));
      VertexSet w2 = set_difference(both, w1);
      auto s = try_split(g, w1, w2, n);
      const auto opt = brute_force_min_separator(g, {w1, w2}, Terminals::kRemovable);
      REQUIRE(opt);
      if (s) {
        ++successes;
        check_two_way(g, *s);
        CHECK(static_cast<int>(s->x.size()) == *opt);
      } else {
        CHECK_FALSE(usable_cut_exists(g, w1, w2, *opt));
      }
      Graph cliqued = make_clique(make_clique(g, w1).graph, w2).graph;
      FlowSeparator plain(g);
      FlowSeparator explicit_net(cliqued);
      CHECK(plain.max_flow(w1, w2, n) == explicit_net.max_flow(w1, w2, n));
    }
    CHECK(successes > 25);
  }
}

TEST_CASE("two_thirds_vtx_sep") {
  SUBCASE("P5, k=1") {
    const VertexSet w = VertexSet::range(5);
    auto s = two_thirds_vtx_sep(path_graph(5), w, 1);
    REQUIRE(s);
    CHECK(s->x.size() == 1);
    CHECK(meet(s->s1, w) <= 3);
    CHECK(meet(s->s2, w) <= 3);
  }
  SUBCASE("clique") {
    for (int k = 1; k <= 2; ++k) {
      CHECK_FALSE(two_thirds_vtx_sep(complete_graph(3 * k + 3), VertexSet::range(3 * k + 3), k));
    }
  }
}

TEST_CASE("two_way_half_vtx_sep") {
  const VertexSet w = VertexSet::range(5);
  auto s = two_way_half_vtx_sep(path_graph(5), w, 1);
  REQUIRE(s);
  CHECK(s->x.size() == 1);
  CHECK(meet(s->s1, w) <= 3);
  CHECK(meet(s->s2, w) <= 3);
  CHECK_FALSE(two_way_half_vtx_sep(complete_graph(8), VertexSet::range(8), 2));
}

TEST_CASE("alpha_sum_sep") {
  SUBCASE("star") {
    Graph star = star_graph(7);
    const VertexSet w = VertexSet::range(8);
    auto s = alpha_sum_sep(star, w, 3);
    REQUIRE(s);
    CHECK(s->x == VertexSet{0});
    CHECK(satisfies_alpha_sum(*s, w, 3, {}));
  }
  SUBCASE("clique") {
    CHECK_FALSE(alpha_sum_sep(complete_graph(10), VertexSet::range(10), 2));
  }
}

TEST_CASE("completeness: tw <= k-1 never yields NotFound") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const Vertex n = 6 + rep % 7;
    Graph g = rep % 3 == 0 ? random_partial_k_tree(n, 1 + rep % 3, 0.2, rng) : random_connected(n, 0.25, rng);
    const int k = exact_treewidth(g) + 1;
    for (int size : {3 * k + 2, 2 * k + 1}) {
      if (size > n) continue;
      const VertexSet w = random_subset(n, size, rng);
      auto a = two_thirds_vtx_sep(g, w, k);
      REQUIRE(a);
      check_two_way(g, *a);
      CHECK(static_cast<int>(a->x.size()) <= k);
      CHECK(3 * meet(a->s1, w) <= 2 * w.size());
      CHECK(3 * meet(a->s2, w) <= 2 * w.size());
      auto b = two_way_half_vtx_sep(g, w, k);
      REQUIRE(b);
      check_two_way(g, *b);
      CHECK(static_cast<int>(b->x.size()) <= k + k / 2);
      CHECK(meet(b->s1, w) <= (w.size() + 1) / 2);
      CHECK(meet(b->s2, w) <= (w.size() + 1) / 2);
      ++checked;
    }
    const int size3 = k + Rational{}.floor_mul(k) + 1;
    if (size3 <= n) {
      const VertexSet w = random_subset(n, size3, rng);
      auto c = alpha_sum_sep(g, w, k);
      REQUIRE(c);
      CHECK(satisfies_alpha_sum(*c, w, k, {}));
    }
  }
  CHECK(checked > 30);
}
