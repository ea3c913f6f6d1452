#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "twapx/generators.hpp"
#include "twapx/graph.hpp"

using namespace twapx;

TEST_CASE("graph construction drops loops and duplicates") {
  Graph g(4, {{0, 1}, {1, 0}, {2, 2}, {3, 1}});
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(1, 3));
  CHECK_FALSE(g.has_edge(2, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 3}});
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::out_of_range);
}

TEST_CASE("vertex set algebra") {
  VertexSet a{3, 1, 1, 5};
  VertexSet b{1, 2};
  CHECK(a.size() == 3);
  CHECK(set_union(a, b) == VertexSet{1, 2, 3, 5});
  CHECK(set_intersection(a, b) == VertexSet{1});
  CHECK(set_difference(a, b) == VertexSet{3, 5});
  CHECK(disjoint(VertexSet{0}, b));
}

TEST_CASE("induced_subgraph") {
  SUBCASE("triangle keep two") {
    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    auto sub = induced_subgraph(tri, {0, 1});
    CHECK(sub.graph.num_vertices() == 2);
    CHECK(sub.graph.num_edges() == 1);
  }
  SUBCASE("keep all is identity") {
    std::mt19937_64 rng(7);
    Graph g = random_gnp(9, 0.4, rng);
    CHECK(induced_subgraph(g, VertexSet::range(9)).graph == g);
  }
  SUBCASE("edges equal filtered parent edges") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
      Graph g = random_gnp(10, 0.3, rng);
      std::vector<Vertex> ids(10);
      for (int i = 0; i < 10; ++i) ids[i] = i;
      std::shuffle(ids.begin(), ids.end(), rng);
      VertexSet keep(std::vector<Vertex>(ids.begin(), ids.begin() + 5));
      auto sub = induced_subgraph(g, keep);
      std::vector<Edge> expected;
      for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v)) expected.emplace_back(u, v);
      std::vector<Edge> got;
      for (auto [u, v] : sub.graph.edges()) got.emplace_back(sub.parent_of(u), sub.parent_of(v));
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      CHECK(sub.to_local_set(sub.to_parent_set(VertexSet::range(5))) == VertexSet::range(5));
      // composition: inducing twice equals inducing once on the smaller set
      VertexSet inner{sub.parent_of(0), sub.parent_of(2), sub.parent_of(4)};
      auto twice = induced_subgraph(sub.graph, {0, 2, 4});
      CHECK(twice.graph == induced_subgraph(g, inner).graph);
    }
  }
}

TEST_CASE("make_clique") {
  Graph g(5);
  auto none = make_clique(g, {});
  CHECK(none.graph == g);
  CHECK(none.fill_edges.empty());
  CHECK(make_clique(complete_graph(4), VertexSet::range(4)).fill_edges.empty());
  auto c5 = make_clique(cycle_graph(5), VertexSet::range(5));
  CHECK(c5.fill_edges.size() == 5);
  CHECK(c5.graph == complete_graph(5));
  // idempotent
  auto again = make_clique(c5.graph, VertexSet::range(5));
  CHECK(again.fill_edges.empty());
  CHECK(again.graph == c5.graph);
}

TEST_CASE("connected_components") {
  auto comps = connected_components(path_graph(3), {1});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0});
  CHECK(comps[1] == VertexSet{2});
  CHECK(connected_components(cycle_graph(6)).size() == 1);
  // 3x3 grid, ids r*3+c, middle column 1,4,7
  auto grid = connected_components(grid_graph(3, 3), {1, 4, 7});
  REQUIRE(grid.size() == 2);
  CHECK(grid[0] == VertexSet{0, 3, 6});
  CHECK(grid[1] == VertexSet{2, 5, 8});
  CHECK(connected_components(Graph(3)).size() == 3);
}

TEST_CASE("edge bound") {
  CHECK(exceeds_edge_bound(complete_graph(5), 1));
  CHECK_FALSE(exceeds_edge_bound(complete_graph(5), 2));
}

TEST_CASE("k-tree generator") {
  std::mt19937_64 rng(3);
  Graph g = random_k_tree(20, 3, rng);
  // (k+1 choose 2) + (n-k-1)k edges
  CHECK(g.num_edges() == 6 + 16 * 3);
  CHECK(connected_components(g).size() == 1);
}
