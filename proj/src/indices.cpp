#include "irrlab/indices.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "irrlab/error.hpp"

namespace irrlab {
namespace {

template <typename F>
std::int64_t sum_over_edges(const Graph& g, F&& f) {
  std::int64_t total = 0;
  for (const auto& e : g.edges()) {
    total += f(std::int64_t{g.degree_unchecked(e.u)}, std::int64_t{g.degree_unchecked(e.v)});
  }
  return total;
}

// Pairwise sums over all vertices via a degree histogram: O(n + Delta^2)
// rather than O(n^2).
template <typename F>
std::int64_t sum_over_vertex_pairs(const Graph& g, F&& f) {
  if (g.order() < 2) return 0;
  const auto stats = min_max_mean_degree(g);
  std::vector<std::int64_t> count(stats.max_degree + 1, 0);
  for (std::size_t v = 0; v < g.order(); ++v) ++count[g.degree_unchecked(static_cast<Vertex>(v))];
  std::int64_t total = 0;
  for (std::int64_t a = 0; a <= stats.max_degree; ++a) {
    if (!count[a]) continue;
    for (std::int64_t b = a + 1; b <= stats.max_degree; ++b) {
      if (count[b]) total += count[a] * count[b] * f(a, b);
    }
  }
  return total;
}

}  // namespace

std::int64_t albertson_irr(const Graph& g) {
  return sum_over_edges(g, [](std::int64_t a, std::int64_t b) { return std::abs(a - b); });
}

std::int64_t sigma(const Graph& g) {
  return sum_over_edges(g, [](std::int64_t a, std::int64_t b) { return (a - b) * (a - b); });
}

std::int64_t zagreb_m1(const Graph& g) {
  std::int64_t total = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree_unchecked(static_cast<Vertex>(v));
    total += d * d;
  }
  return total;
}

std::int64_t zagreb_m2(const Graph& g) {
  return sum_over_edges(g, [](std::int64_t a, std::int64_t b) { return a * b; });
}

std::int64_t total_irregularity(const Graph& g) {
  return sum_over_vertex_pairs(g, [](std::int64_t a, std::int64_t b) { return b - a; });
}

std::int64_t total_sigma(const Graph& g) {
  return sum_over_vertex_pairs(g, [](std::int64_t a, std::int64_t b) { return (b - a) * (b - a); });
}

std::int64_t szekeres_wilf(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("Szekeres-Wilf number needs at least one vertex");

  // Bucket queue keyed by current degree; stale entries are skipped lazily.
  std::vector<int> deg(n);
  int max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree_unchecked(static_cast<Vertex>(v));
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (std::size_t v = 0; v < n; ++v) buckets[deg[v]].push_back(static_cast<Vertex>(v));
  std::vector<char> removed(n, 0);

  std::int64_t best = 0;
  int level = 0;
  for (std::size_t peeled = 0; peeled < n;) {
    while (buckets[level].empty()) ++level;
    const Vertex v = buckets[level].back();
    buckets[level].pop_back();
    if (removed[v] || deg[v] != level) continue;
    removed[v] = 1;
    ++peeled;
    best = std::max<std::int64_t>(best, level);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      buckets[--deg[w]].push_back(w);
    }
    if (level > 0) --level;
  }
  return best;
}

std::int64_t max_edges(std::int64_t n, std::int64_t c) {
  if (c < 1 || c > n) {
    throw PreconditionError("max_edges needs 1 <= c <= n, got n=" + std::to_string(n) +
                            ", c=" + std::to_string(c));
  }
  return (n - c) * (n - c + 1) / 2;
}

double spectral_radius(const Graph& g, const PowerIterationOptions& options) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("spectral radius needs at least one vertex");
  if (g.edge_count() == 0) return 0.0;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double previous = 0.0;
  for (std::int64_t iter = 1; iter <= options.max_iterations; ++iter) {
    // y = (A + I) x
    double rayleigh = 0.0;
    double norm2 = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double acc = x[v];
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) acc += x[w];
      y[v] = acc;
      rayleigh += x[v] * acc;
      norm2 += acc * acc;
    }
    const double estimate = rayleigh - 1.0;
    if (iter > 1 && std::abs(estimate - previous) < options.tolerance) return estimate;
    previous = estimate;
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t v = 0; v < n; ++v) x[v] = y[v] * inv;
  }
  throw ConvergenceError("power iteration did not converge within " +
                         std::to_string(options.max_iterations) + " iterations");
}

double cs_irregularity(const Graph& g, const PowerIterationOptions& options) {
  const double lambda = spectral_radius(g, options);
  return lambda - min_max_mean_degree(g).mean_degree.to_double();
}

double albertson_upper_bound(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw PreconditionError("Albertson upper bound needs a connected graph with n >= 2");
  }
  const auto stats = min_max_mean_degree(g);
  if (stats.min_degree < 1) throw PreconditionError("Albertson upper bound needs delta >= 1");
  const double hi = stats.max_degree;
  const double lo = stats.min_degree;
  return (hi - lo) / std::sqrt(hi * lo) *
         std::sqrt(static_cast<double>(g.edge_count()) * static_cast<double>(zagreb_m2(g)));
}

std::int64_t sigma_t_upper_bound(std::int64_t n) {
  if (n < 3) throw PreconditionError("total sigma bound needs n >= 3, got " + std::to_string(n));
  const std::int64_t floor4 = n / 4;
  const std::int64_t ceil4 = (n + 3) / 4;
  const std::int64_t floor34 = 3 * n / 4;
  const std::int64_t ceil34 = (3 * n + 3) / 4;
  const std::int64_t r = n % 4;
  if (r == 0 || r == 3) {
    const std::int64_t t = n - 1 - ceil4;
    return ceil4 * floor34 * t * t;
  }
  const std::int64_t t = n - 1 - floor4;
  return floor4 * ceil34 * t * t;
}

double bell_max_cs(std::int64_t n) {
  if (n < 2) throw PreconditionError("Bell maximum needs n >= 2, got " + std::to_string(n));
  const double base = static_cast<double>(n) / 4.0 - 0.5;
  return n % 2 == 0 ? base : base + 1.0 / (4.0 * static_cast<double>(n));
}

IndexBundle compute_indices(const Graph& g, const PowerIterationOptions& options) {
  IndexBundle b;
  b.irr = albertson_irr(g);
  b.sigma = sigma(g);
  b.m1 = zagreb_m1(g);
  b.m2 = zagreb_m2(g);
  b.irr_total = total_irregularity(g);
  b.sigma_total = total_sigma(g);
  b.szekeres_wilf = szekeres_wilf(g);
  b.spectral_radius = spectral_radius(g, options);
  b.cs_irregularity = b.spectral_radius - min_max_mean_degree(g).mean_degree.to_double();
  return b;
}

}  // namespace irrlab
