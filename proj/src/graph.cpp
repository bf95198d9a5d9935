#include "irrlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "irrlab/error.hpp"

namespace irrlab {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::int64_t DegreeSequence::sum() const {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

DegreeSequence DegreeSequence::sorted_descending() const {
  DegreeSequence out{values};
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

std::string DegreeSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ')';
  return os.str();
}

Graph Graph::from_pairs(std::span<const std::pair<Vertex, Vertex>> pairs,
                        std::optional<std::size_t> declared_n) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  Vertex max_endpoint = -1;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0) {
      throw PreconditionError("negative vertex id in pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
    }
    if (a == b) {
      throw PreconditionError("self-loop (" + std::to_string(a) + "," + std::to_string(b) +
                              ") is not allowed in a simple graph");
    }
    max_endpoint = std::max({max_endpoint, a, b});
    edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::size_t n = static_cast<std::size_t>(max_endpoint + 1);
  if (declared_n) {
    if (max_endpoint >= 0 && static_cast<std::size_t>(max_endpoint) >= *declared_n) {
      throw PreconditionError("endpoint " + std::to_string(max_endpoint) +
                              " is out of range for declared vertex count " +
                              std::to_string(*declared_n));
    }
    n = *declared_n;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

Graph Graph::from_unique_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n_) + ")");
  }
  return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
  const Edge key = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

Graph from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                     std::optional<std::size_t> declared_n) {
  return Graph::from_pairs(pairs, declared_n);
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence seq;
  seq.values.resize(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    seq.values[v] = g.degree_unchecked(static_cast<Vertex>(v));
  }
  return seq;
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(static_cast<Vertex>(start));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_tree(const Graph& g) {
  // n = 0 has no spanning tree with n-1 edges.
  return g.order() >= 1 && g.edge_count() + 1 == g.order() && is_connected(g);
}

DegreeStats min_max_mean_degree(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("degree statistics need at least one vertex");
  int lo = g.degree_unchecked(0);
  int hi = lo;
  for (std::size_t v = 1; v < g.order(); ++v) {
    const int d = g.degree_unchecked(static_cast<Vertex>(v));
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi,
          Rational::of(2 * static_cast<std::int64_t>(g.edge_count()),
                       static_cast<std::int64_t>(g.order()))};
}

}  // namespace irrlab
