#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "oracles.hpp"

using namespace irrlab;

static DegreeSequence sorted(const Graph& g) { return degree_sequence(g).sorted_descending(); }

TEST_CASE("named families") {
  CHECK(path(1).edge_count() == 0);
  CHECK(degree_sequence(path(4)) == DegreeSequence{{1, 2, 2, 1}});
  CHECK(degree_sequence(star(4)) == DegreeSequence{{3, 1, 1, 1}});
  CHECK(star(2).edge_count() == 1);

  const auto ds = double_star(2, 3);
  CHECK(ds.order() == 5);
  CHECK(degree(ds, 0) == 3);
  CHECK(degree(ds, 1) == 2);
  CHECK(ds.has_edge(0, 1));
  CHECK(is_tree(ds));
  CHECK(sorted(ds) == DegreeSequence{{3, 2, 1, 1, 1}});
  CHECK(sorted(double_star(1, 3)) == sorted(star(4)));
  CHECK(is_tree(path(5)));
  CHECK(path(5).edge_count() == 4);

  const auto k23 = complete_bipartite(2, 3);
  CHECK(k23.edge_count() == 6);
  CHECK(degree_sequence(k23) == DegreeSequence{{3, 3, 2, 2, 2}});
  CHECK_FALSE(k23.has_edge(0, 1));
  CHECK_FALSE(k23.has_edge(2, 4));
}

TEST_CASE("caterpillars") {
  const auto c33 = caterpillar_uniform({3, 3});
  CHECK(c33.order() == 12);
  CHECK(c33.edge_count() == 11);
  CHECK(spine_degrees(c33, 3) == std::vector<int>{4, 5, 4});
  CHECK(c33.has_edge(0, 1));
  CHECK(c33.has_edge(1, 2));
  CHECK(c33.has_edge(0, 3));
  CHECK(c33.has_edge(2, 11));

  const auto c = caterpillar_from_spine({{3, 4, 2}});
  CHECK(spine_degrees(c, 3) == std::vector<int>{3, 4, 2});
  CHECK(c.order() == 3 + 2 + 2 + 1);
  CHECK(is_tree(c));

  CHECK(sorted(caterpillar_uniform({1, 3})) == sorted(star(4)));
  const auto c23 = caterpillar_uniform({2, 3});
  CHECK(c23.order() == 8);
  CHECK(spine_degrees(c23, 2) == std::vector<int>{4, 4});
  CHECK(sorted(caterpillar_from_spine({{4, 5, 4}})) == sorted(c33));
  CHECK(caterpillar_from_spine({{1, 1}}) == path(2));
  CHECK(sorted(caterpillar_from_spine({{2, 2, 2}})) == sorted(path(5)));
  CHECK(is_tree(caterpillar_from_spine({{2, 2, 2}})));

  const auto single = caterpillar_from_spine({{4}});
  CHECK(degree_sequence(single) == DegreeSequence{{4, 1, 1, 1, 1}});
}

TEST_CASE("generator preconditions") {
  CHECK_THROWS_AS(path(0), PreconditionError);
  CHECK_THROWS_AS(star(1), PreconditionError);
  CHECK_THROWS_AS(double_star(0, 2), PreconditionError);
  CHECK_THROWS_AS(double_star(1, 1), PreconditionError);
  CHECK_THROWS_AS(complete_bipartite(0, 3), PreconditionError);
  CHECK_THROWS_AS(caterpillar_uniform({0, 1}), PreconditionError);
  CHECK_THROWS_AS(caterpillar_uniform({2, -1}), PreconditionError);
  CHECK_THROWS_AS(caterpillar_from_spine({{2, 1, 2}}), PreconditionError);
  CHECK_THROWS_AS(caterpillar_from_spine({{0, 2}}), PreconditionError);
  CHECK_THROWS_AS(caterpillar_from_spine({{}}), PreconditionError);
  CHECK_FALSE(SpineSequence{{3, 1, 3}}.realizable());
  CHECK(SpineSequence{{1, 2, 1}}.realizable());
}

TEST_CASE("property: caterpillar structure over a grid") {
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= 12; ++m) {
      const auto g = caterpillar_uniform({n, m});
      CHECK(g.order() == static_cast<std::size_t>(n * (m + 1)));
      CHECK(is_tree(g));
      const auto d = oracle::degrees(oracle::adjacency(g));
      for (int i = 0; i < n; ++i) {
        const int spine_nbrs = n == 1 ? 0 : (i == 0 || i == n - 1 ? 1 : 2);
        CHECK(d[i] == m + spine_nbrs);
      }
      for (std::size_t v = n; v < g.order(); ++v) CHECK(d[v] == 1);
    }
  }
}

TEST_CASE("property: spine caterpillars realize their sequence") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    std::vector<int> degs(k);
    for (int i = 0; i < k; ++i) {
      const int lo = (k == 1) ? 1 : (i == 0 || i == k - 1 ? 1 : 2);
      degs[i] = lo + static_cast<int>(rng() % 6);
    }
    const auto g = caterpillar_from_spine({degs});
    CHECK(is_tree(g));
    CHECK(spine_degrees(g, k) == degs);
    for (std::size_t v = k; v < g.order(); ++v) CHECK(degree(g, static_cast<Vertex>(v)) == 1);
  }
}

TEST_CASE("prufer examples") {
  CHECK(prufer_decode({}) == path(2));
  CHECK(sorted(prufer_decode({0, 0})) == sorted(star(4)));
  CHECK(degree(prufer_decode({0, 0}), 0) == 3);
  CHECK(prufer_encode(star(5)) == std::vector<int>{0, 0, 0});
  CHECK(prufer_roundtrip({}).empty());
  CHECK(prufer_roundtrip({0}) == std::vector<int>{0});
  CHECK(prufer_roundtrip({3, 3, 3}) == std::vector<int>{3, 3, 3});
  CHECK(degree(prufer_decode({3, 3, 3}), 3) == 4);
  CHECK(prufer_encode(path(4)) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(prufer_decode({0, 5}), PreconditionError);
  CHECK_THROWS_AS(prufer_encode(complete_bipartite(2, 2)), PreconditionError);
}

TEST_CASE("property: prufer round trip, exhaustive to n = 6") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> code(n - 2, 0);
    std::uint64_t seen = 0;
    while (true) {
      ++seen;
      const auto t = prufer_decode(code);
      REQUIRE(is_tree(t));
      CHECK(t.order() == static_cast<std::size_t>(n));
      CHECK(prufer_encode(t) == code);
      CHECK(prufer_roundtrip(code) == code);
      // vertex degree is one plus its multiplicity in the code
      for (int v = 0; v < n; ++v) {
        const auto mult = std::count(code.begin(), code.end(), v);
        CHECK(degree(t, v) == 1 + mult);
      }
      int i = n - 3;
      while (i >= 0 && code[i] == n - 1) code[i--] = 0;
      if (i < 0) break;
      ++code[i];
    }
    CHECK(seen == labeled_tree_count(n));
  }
}

TEST_CASE("property: prufer round trip, sampled to n = 10") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 4);
    std::vector<int> code(n - 2);
    for (auto& c : code) c = static_cast<int>(rng() % n);
    CHECK(prufer_roundtrip(code) == code);
    const auto t = oracle::random_tree(rng, n);
    CHECK(prufer_decode(prufer_encode(t)) == t);
  }
}

TEST_CASE("labeled tree enumeration") {
  CHECK(labeled_tree_count(1) == 1);
  CHECK(labeled_tree_count(2) == 1);
  CHECK(labeled_tree_count(3) == 3);
  CHECK(labeled_tree_count(4) == 16);
  CHECK(labeled_tree_count(5) == 125);
  CHECK(labeled_tree_count(8) == 262144);
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<Edge>> distinct;
    std::uint64_t count = 0;
    for_each_labeled_tree(n, [&](const Graph& t) {
      ++count;
      CHECK(is_tree(t));
      distinct.insert(std::vector<Edge>(t.edges().begin(), t.edges().end()));
    });
    CHECK(count == labeled_tree_count(n));
    CHECK(distinct.size() == count);
  }
  const auto all = all_labeled_trees(5);
  CHECK(all.front() == labeled_tree(5, 0));
  CHECK(all[77] == labeled_tree(5, 77));
  std::vector<Graph> middle;
  for_each_labeled_tree_in_range(5, 40, 60, [&](const Graph& t) { middle.push_back(t); });
  REQUIRE(middle.size() == 20);
  for (std::size_t i = 0; i < middle.size(); ++i) CHECK(middle[i] == all[40 + i]);

  CHECK_THROWS_AS(for_each_labeled_tree(0, [](const Graph&) {}), PreconditionError);
  CHECK_THROWS_AS(for_each_labeled_tree(kMaxTreeOrder + 1, [](const Graph&) {}),
                  PreconditionError);
  CHECK_THROWS_AS(labeled_tree(4, 16), PreconditionError);
}

TEST_CASE("graph enumeration") {
  CHECK(pair_count(4) == 6);
  CHECK(all_graphs(3, false).size() == 8);
  CHECK(all_graphs(3, true).size() == 4);
  CHECK(all_graphs(4, false).size() == 64);
  CHECK(all_graphs(4, true).size() == 38);
  CHECK(all_graphs(5, true).size() == 728);
  CHECK(all_graphs(1, false).size() == 1);

  // bit order (0,1),(0,2),...
  CHECK(graph_from_mask(4, 1).has_edge(0, 1));
  CHECK(graph_from_mask(4, 4).has_edge(0, 3));
  CHECK(graph_from_mask(4, 8).has_edge(1, 2));
  CHECK(graph_from_mask(4, 32).has_edge(2, 3));

  std::uint64_t prev = 0, visited = 0;
  for_each_graph(4, false, [&](std::uint64_t mask, const Graph& g) {
    if (visited > 0) CHECK(mask > prev);
    prev = mask;
    ++visited;
    CHECK(g == graph_from_mask(4, mask));
    CHECK(static_cast<int>(g.edge_count()) == std::popcount(mask));
  });
  CHECK(visited == 64);

  CHECK_THROWS_AS(all_graphs(kMaxGraphOrder + 1, false), PreconditionError);
  CHECK_THROWS_AS(all_graphs(0, false), PreconditionError);
}
