#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <variant>

#include "twapx/generators.hpp"
#include "twapx/triangulation.hpp"
#include "twapx/validation.hpp"

using namespace twapx;

namespace {

// Width of the elimination ordering: max later-neighbor count with fill.
int ordering_width(const Graph& g, const std::vector<Vertex>& order) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> gone(n, 0);
  int width = 0;
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex u = 0; u < n; ++u)
      if (!gone[u] && u != v && adj[v][u]) later.push_back(u);
    width = std::max<int>(width, static_cast<int>(later.size()));
    for (Vertex a : later)
      for (Vertex b : later)
        if (a != b) adj[a][b] = 1;
    gone[v] = 1;
  }
  return width;
}

int permutation_treewidth(const Graph& g) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  int best = g.num_vertices();
  do {
    best = std::min(best, ordering_width(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

int brute_force_clique(const Graph& g) {
  const Vertex n = g.num_vertices();
  int best = 0;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    bool clique = true;
    for (Vertex u = 0; u < n && clique; ++u)
      for (Vertex v = u + 1; v < n && clique; ++v)
        if ((m >> u & 1) && (m >> v & 1) && !g.has_edge(u, v)) clique = false;
    if (clique) best = std::max(best, std::popcount(m));
  }
  return best;
}

}  // namespace

TEST_CASE("is_chordal") {
  auto c4 = is_chordal(cycle_graph(4));
  REQUIRE(std::holds_alternative<NotChordal>(c4));
  auto cycle = std::get<NotChordal>(c4).cycle;
  CHECK(cycle.size() == 4);
  std::sort(cycle.begin(), cycle.end());
  CHECK(cycle == std::vector<Vertex>{0, 1, 2, 3});

  Graph chord(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  auto ok = is_chordal(chord);
  REQUIRE(std::holds_alternative<EliminationOrdering>(ok));
  CHECK(is_perfect_elimination_ordering(chord, std::get<EliminationOrdering>(ok)));

  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = random_gnp(9, 0.3, rng);
    auto saturated = make_clique(g, VertexSet::range(9)).graph;
    CHECK(std::holds_alternative<EliminationOrdering>(is_chordal(saturated)));
    auto cert = is_chordal(g);
    if (auto* nc = std::get_if<NotChordal>(&cert)) {
      // witness: chordless cycle of length >= 4
      const auto& cy = nc->cycle;
      REQUIRE(cy.size() >= 4);
      for (std::size_t i = 0; i < cy.size(); ++i) {
        for (std::size_t j = i + 1; j < cy.size(); ++j) {
          const bool consecutive = j == i + 1 || (i == 0 && j == cy.size() - 1);
          CHECK(g.has_edge(cy[i], cy[j]) == consecutive);
        }
      }
    }
  }
}

TEST_CASE("clique_number_chordal") {
  auto peo = [](const Graph& g) { return std::get<EliminationOrdering>(is_chordal(g)); };
  CHECK(clique_number_chordal(complete_graph(5), peo(complete_graph(5))) == 5);
  std::mt19937_64 rng(4);
  Graph tree = random_tree(12, rng);
  CHECK(clique_number_chordal(tree, peo(tree)) == 2);
  CHECK_THROWS_AS(clique_number_chordal(cycle_graph(4), EliminationOrdering{{0, 1, 2, 3}}),
                  std::invalid_argument);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = random_k_tree(10, 1 + rep % 4, rng);
    Graph h = random_partial_k_tree(10, 2 + rep % 3, 0.3, rng);
    auto tri = min_degree_triang(h).triangulation;
    std::vector<Edge> all = tri.base.edges();
    all.insert(all.end(), tri.fill_edges.begin(), tri.fill_edges.end());
    Graph filled(10, std::span<const Edge>(all));
    for (const Graph* c : {&g, &filled}) {
      CHECK(clique_number_chordal(*c, peo(*c)) == brute_force_clique(*c));
    }
  }
}

TEST_CASE("check_tree_decomposition") {
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  TreeDecomposition one{{VertexSet{0, 1, 2}}, {}, 2};
  CHECK(check_tree_decomposition(tri, one).empty());

  TreeDecomposition broken{{VertexSet{0, 1}, VertexSet{1, 2}}, {{0, 1}}, 1};
  auto vs = check_tree_decomposition(tri, broken);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == ViolationKind::kEdgeUncovered);
  CHECK(vs[0].edge == Edge{0, 2});

  Graph p3 = path_graph(3);
  TreeDecomposition gap{{VertexSet{0, 1}, VertexSet{2}, VertexSet{1, 2}}, {{0, 1}, {1, 2}}, 1};
  vs = check_tree_decomposition(p3, gap);
  REQUIRE_FALSE(vs.empty());
  CHECK(vs[0].kind == ViolationKind::kSubtreeDisconnected);
  CHECK(vs[0].vertex == 1);

  TreeDecomposition missing{{VertexSet{0, 1}}, {}, 1};
  vs = check_tree_decomposition(p3, missing);
  CHECK(std::any_of(vs.begin(), vs.end(), [](const Violation& v) {
    return v.kind == ViolationKind::kVertexUncovered && v.vertex == 2;
  }));

  TreeDecomposition cyclic{{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{1}}, {{0, 1}, {1, 2}, {2, 0}}, 1};
  vs = check_tree_decomposition(p3, cyclic);
  CHECK(std::any_of(vs.begin(), vs.end(), [](const Violation& v) { return v.kind == ViolationKind::kNotATree; }));

  TreeDecomposition wrong_width{{VertexSet{0, 1, 2}}, {}, 5};
  vs = check_tree_decomposition(p3, wrong_width);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == ViolationKind::kWidthMismatch);

  TreeDecomposition out_of_range{{VertexSet{0, 1, 2, 7}}, {}, 3};
  vs = check_tree_decomposition(p3, out_of_range);
  CHECK(vs[0].kind == ViolationKind::kBagVertexOutOfRange);
}

TEST_CASE("exact_treewidth") {
  CHECK(exact_treewidth(complete_graph(4)) == 3);
  CHECK(exact_treewidth(path_graph(5)) == 1);
  CHECK(exact_treewidth(cycle_graph(5)) == 2);
  CHECK(exact_treewidth(grid_graph(3, 3)) == 3);
  CHECK(exact_treewidth(Graph(3)) == 0);
  CHECK(exact_treewidth(Graph(0)) == -1);
  CHECK_THROWS_AS(exact_treewidth(Graph(15)), std::invalid_argument);
  CHECK(permutation_treewidth(grid_graph(3, 3)) == 3);

  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 25; ++rep) {
    const Vertex n = 4 + rep % 5;
    Graph g = random_gnp(n, 0.45, rng);
    const int tw = exact_treewidth(g);
    CHECK(tw == permutation_treewidth(g));
    std::vector<Edge> e = g.edges();
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, n);
    Graph universal(n + 1, std::span<const Edge>(e));
    CHECK(exact_treewidth(universal) == tw + 1);
  }
}

TEST_CASE("brute force separators") {
  CHECK(brute_force_min_separator(path_graph(3), {{0}, {2}}) == 1);
  CHECK_FALSE(brute_force_min_separator(complete_graph(5), {{0, 1}, {2}}).has_value());
  CHECK(brute_force_min_separator(complete_graph(5), {{0, 1}, {2}}, Terminals::kRemovable) == 1);
  CHECK_THROWS_AS(brute_force_min_separator(Graph(11), {{0}, {1}}), std::invalid_argument);
  CHECK(brute_force_min_multiway_cut(star_graph(3), {VertexSet{1}, VertexSet{2}, VertexSet{3}}) == 1);
}
