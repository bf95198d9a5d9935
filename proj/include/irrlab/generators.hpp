#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "irrlab/graph.hpp"

namespace irrlab {

/// Uniform caterpillar C(n, m): n spine vertices, m pendant leaves on each.
struct CaterpillarSpec {
  int spine_length;
  int leaves_per_spine_vertex;
};

/// Intended spine-vertex degrees d_1..d_k of a caterpillar, in path order.
struct SpineSequence {
  std::vector<int> degrees;

  /// True when every end entry is >= 1 and every interior entry is >= 2.
  bool realizable() const;
};

inline constexpr int kMaxTreeOrder = 10;
inline constexpr int kMaxGraphOrder = 6;

// Labeling conventions (all generators):
//   path        0 - 1 - ... - n-1
//   star        centre 0, leaves 1..n-1
//   double_star centres u=0 (degree k) and v=1 (degree r); u's leaves first
//   K_{m,n}     part A = 0..m-1, part B = m..m+n-1
//   caterpillar spine x_1..x_n = 0..n-1, then leaves grouped by spine vertex

Graph path(int n);
Graph star(int n);
Graph double_star(int r, int k);
Graph complete_bipartite(int m, int n);
Graph caterpillar_uniform(const CaterpillarSpec& spec);
Graph caterpillar_from_spine(const SpineSequence& seq);

/// Degrees of the first `spine_length` vertices of a caterpillar built above.
std::vector<int> spine_degrees(const Graph& caterpillar, std::size_t spine_length);

// -- Pr\"ufer codes -----------------------------------------------------------

/// Tree on code.size()+2 vertices. Entries must lie in [0, n).
Graph prufer_decode(const std::vector<int>& code);

/// Inverse of prufer_decode; g must be a tree with at least two vertices.
std::vector<int> prufer_encode(const Graph& tree);

std::vector<int> prufer_roundtrip(const std::vector<int>& code);

// -- Exhaustive enumeration ---------------------------------------------------

/// n^(n-2) for n >= 2, 1 for n = 1.
std::uint64_t labeled_tree_count(int n);

/// The tree whose Pr\"ufer code is the rank-th code in lexicographic order.
Graph labeled_tree(int n, std::uint64_t rank);

/// Visits every labeled tree of order n (1 <= n <= kMaxTreeOrder) in
/// lexicographic Pr\"ufer order.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit);

/// Visits trees with ranks in [begin, end) in the same order.
void for_each_labeled_tree_in_range(int n, std::uint64_t begin, std::uint64_t end,
                                    const std::function<void(const Graph&)>& visit);

std::vector<Graph> all_labeled_trees(int n);

/// Number of unordered vertex pairs, i.e. bits in a graph mask.
int pair_count(int n);

/// Graph whose edges are the set bits of `mask`; bit b is the b-th pair in
/// the order (0,1),(0,2),...,(0,n-1),(1,2),...
Graph graph_from_mask(int n, std::uint64_t mask);

/// Visits every labeled simple graph on n vertices (1 <= n <= kMaxGraphOrder)
/// in increasing mask order, optionally restricted to connected ones. The
/// mask is passed alongside the graph.
void for_each_graph(int n, bool connected_only,
                    const std::function<void(std::uint64_t mask, const Graph&)>& visit);

std::vector<Graph> all_graphs(int n, bool connected_only);

}  // namespace irrlab
