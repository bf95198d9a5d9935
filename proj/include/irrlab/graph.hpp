#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace irrlab {

using Vertex = std::int32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Exact non-negative rational, always in lowest terms with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Degrees indexed by vertex id. The arrangement is significant and never
/// sorted implicitly.
struct DegreeSequence {
  std::vector<int> values;

  std::int64_t sum() const;
  DegreeSequence sorted_descending() const;
  std::string to_string() const;  // "(3,1,1,1)"

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;
};

struct DegreeStats {
  int min_degree;
  int max_degree;
  Rational mean_degree;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept sorted and deduplicated; neighbour lists are built
/// once at construction in compressed-row form.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from arbitrary pairs. Duplicate pairs (in either
  /// orientation) collapse; self-loops and out-of-range endpoints throw
  /// PreconditionError.
  static Graph from_pairs(std::span<const std::pair<Vertex, Vertex>> pairs,
                          std::optional<std::size_t> declared_n = std::nullopt);

  /// Fast path for generators that already produce valid, unique edges.
  static Graph from_unique_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  /// Unchecked degree lookup for hot loops; v must be in range.
  int degree_unchecked(Vertex v) const noexcept {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

Graph from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                     std::optional<std::size_t> declared_n = std::nullopt);

int degree(const Graph& g, Vertex v);
DegreeSequence degree_sequence(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::size_t component_count(const Graph& g);

/// Throws PreconditionError on the empty graph.
DegreeStats min_max_mean_degree(const Graph& g);

}  // namespace irrlab
