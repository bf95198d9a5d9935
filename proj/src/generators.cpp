#include "irrlab/generators.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "irrlab/error.hpp"

namespace irrlab {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

}  // namespace

bool SpineSequence::realizable() const {
  if (degrees.empty()) return false;
  const std::size_t k = degrees.size();
  for (std::size_t i = 0; i < k; ++i) {
    const bool end = i == 0 || i + 1 == k;
    if (degrees[i] < (end ? 1 : 2)) return false;
  }
  return true;
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_unique_edges(n, std::move(edges));
}

Graph star(int n) {
  require(n >= 2, "star needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex leaf = 1; leaf < n; ++leaf) edges.push_back({0, leaf});
  return Graph::from_unique_edges(n, std::move(edges));
}

Graph double_star(int r, int k) {
  require(k >= 2, "double star needs k >= 2, got k=" + std::to_string(k));
  require(r >= 1, "double star needs r >= 1, got r=" + std::to_string(r));
  const int n = r + k;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  edges.push_back({0, 1});
  Vertex next = 2;
  for (int i = 0; i < k - 1; ++i) edges.push_back({0, next++});
  for (int i = 0; i < r - 1; ++i) edges.push_back({1, next++});
  return Graph::from_unique_edges(n, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite needs both parts >= 1, got (" +
                                std::to_string(m) + "," + std::to_string(n) + ")");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n);
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = m; b < m + n; ++b) edges.push_back({a, b});
  }
  return Graph::from_unique_edges(m + n, std::move(edges));
}

Graph caterpillar_uniform(const CaterpillarSpec& spec) {
  const int n = spec.spine_length;
  const int m = spec.leaves_per_spine_vertex;
  require(n >= 1 && m >= 1, "caterpillar needs n >= 1 and m >= 1, got (" + std::to_string(n) +
                                "," + std::to_string(m) + ")");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (m + 1));
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  Vertex next = n;
  for (Vertex i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) edges.push_back({i, next++});
  }
  return Graph::from_unique_edges(static_cast<std::size_t>(n) * (m + 1), std::move(edges));
}

Graph caterpillar_from_spine(const SpineSequence& seq) {
  const auto& d = seq.degrees;
  const std::size_t k = d.size();
  require(k >= 1, "spine sequence must be non-empty");
  for (std::size_t i = 0; i < k; ++i) {
    const bool end = i == 0 || i + 1 == k;
    require(d[i] >= (end ? 1 : 2),
            "spine degree d_" + std::to_string(i + 1) + "=" + std::to_string(d[i]) +
                (end ? " must be >= 1 at a spine end" : " must be >= 2 in the spine interior"));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  auto next = static_cast<Vertex>(k);
  for (std::size_t i = 0; i < k; ++i) {
    const int spine_neighbours = k == 1 ? 0 : (i == 0 || i + 1 == k ? 1 : 2);
    for (int j = 0; j < d[i] - spine_neighbours; ++j) {
      edges.push_back({static_cast<Vertex>(i), next++});
    }
  }
  return Graph::from_unique_edges(static_cast<std::size_t>(next), std::move(edges));
}

std::vector<int> spine_degrees(const Graph& caterpillar, std::size_t spine_length) {
  require(spine_length <= caterpillar.order(), "spine longer than the graph");
  std::vector<int> out(spine_length);
  for (std::size_t i = 0; i < spine_length; ++i) {
    out[i] = caterpillar.degree(static_cast<Vertex>(i));
  }
  return out;
}

Graph prufer_decode(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  std::vector<int> remaining(n, 1);
  for (int x : code) {
    require(x >= 0 && x < n, "Prüfer entry " + std::to_string(x) + " outside [0," +
                                 std::to_string(n) + ")");
    ++remaining[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decoding: `ptr` scans for the smallest leaf; a vertex that
  // becomes a leaf below `ptr` is consumed immediately.
  int ptr = 0;
  while (remaining[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : code) {
    edges.push_back({leaf, x});
    if (--remaining[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (remaining[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Graph::from_unique_edges(n, std::move(edges));
}

std::vector<int> prufer_encode(const Graph& tree) {
  require(tree.order() >= 2 && is_tree(tree), "Prüfer encoding needs a tree with n >= 2");
  const int n = static_cast<int>(tree.order());
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = tree.degree_unchecked(v);
  std::vector<char> removed(n, 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.push(v);
  }
  std::vector<int> code;
  code.reserve(n - 2);
  while (static_cast<int>(code.size()) < n - 2) {
    const int leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    for (Vertex w : tree.neighbors(leaf)) {
      if (removed[w]) continue;
      code.push_back(w);
      if (--deg[w] == 1) leaves.push(w);
      break;
    }
  }
  return code;
}

std::vector<int> prufer_roundtrip(const std::vector<int>& code) {
  return prufer_encode(prufer_decode(code));
}

std::uint64_t labeled_tree_count(int n) {
  require(n >= 1, "tree order must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

Graph labeled_tree(int n, std::uint64_t rank) {
  require(n >= 1 && n <= kMaxTreeOrder,
          "labeled tree order must be in [1," + std::to_string(kMaxTreeOrder) + "]");
  require(rank < labeled_tree_count(n), "tree rank out of range");
  if (n == 1) return Graph::from_unique_edges(1, {});
  std::vector<int> code(n - 2);
  for (int i = n - 3; i >= 0; --i) {
    code[i] = static_cast<int>(rank % n);
    rank /= n;
  }
  return prufer_decode(code);
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit) {
  require(n >= 1 && n <= kMaxTreeOrder, "labeled tree enumeration is capped at n <= " +
                                            std::to_string(kMaxTreeOrder) + ", got " +
                                            std::to_string(n));
  if (n == 1) {
    visit(Graph::from_unique_edges(1, {}));
    return;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    visit(prufer_decode(code));
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) return;
    ++code[i];
  }
}

void for_each_labeled_tree_in_range(int n, std::uint64_t begin, std::uint64_t end,
                                    const std::function<void(const Graph&)>& visit) {
  require(n >= 1 && n <= kMaxTreeOrder, "labeled tree enumeration is capped at n <= " +
                                            std::to_string(kMaxTreeOrder) + ", got " +
                                            std::to_string(n));
  end = std::min(end, labeled_tree_count(n));
  if (begin >= end) return;
  if (n <= 2) {
    visit(labeled_tree(n, 0));
    return;
  }
  std::vector<int> code(n - 2);
  std::uint64_t rank = begin;
  for (int i = n - 3; i >= 0; --i) {
    code[i] = static_cast<int>(rank % n);
    rank /= n;
  }
  for (std::uint64_t r = begin; r < end; ++r) {
    visit(prufer_decode(code));
    int i = n - 3;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i >= 0) ++code[i];
  }
}

std::vector<Graph> all_labeled_trees(int n) {
  std::vector<Graph> out;
  for_each_labeled_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, std::uint64_t mask) {
  require(n >= 1 && n <= kMaxGraphOrder + 5, "graph order out of range for a mask");
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1u) edges.push_back({u, v});
    }
  }
  return Graph::from_unique_edges(n, std::move(edges));
}

void for_each_graph(int n, bool connected_only,
                    const std::function<void(std::uint64_t, const Graph&)>& visit) {
  require(n >= 1 && n <= kMaxGraphOrder, "graph enumeration is capped at n <= " +
                                             std::to_string(kMaxGraphOrder) + ", got " +
                                             std::to_string(n));
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (connected_only && !is_connected(g)) continue;
    visit(mask, g);
  }
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
  std::vector<Graph> out;
  for_each_graph(n, connected_only, [&](std::uint64_t, const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace irrlab
