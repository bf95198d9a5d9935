#pragma once

#include <cstdint>
#include <string>

#include "irrlab/graph.hpp"

namespace irrlab {

/// Every index this library computes for a single graph.
/// Field order is the serialization order.
struct IndexBundle {
  std::int64_t irr = 0;
  std::int64_t sigma = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::int64_t irr_total = 0;
  std::int64_t sigma_total = 0;
  std::int64_t szekeres_wilf = 0;
  double spectral_radius = 0.0;
  double cs_irregularity = 0.0;
};

// Degree-based indices: exact integer sums straight from the definitions.

/// Albertson index: sum over edges of |d_u - d_v|.
std::int64_t albertson_irr(const Graph& g);
/// Sigma index: sum over edges of (d_u - d_v)^2.
std::int64_t sigma(const Graph& g);
std::int64_t zagreb_m1(const Graph& g);
std::int64_t zagreb_m2(const Graph& g);
/// |d_u - d_v| over all unordered vertex pairs, adjacent or not.
std::int64_t total_irregularity(const Graph& g);
/// (d_u - d_v)^2 over all unordered vertex pairs.
std::int64_t total_sigma(const Graph& g);

/// max over subgraphs of the minimum degree (the degeneracy), by repeatedly
/// deleting a minimum-degree vertex. Requires n >= 1.
std::int64_t szekeres_wilf(const Graph& g);

/// Largest number of edges in a graph with n vertices and c components:
/// (n-c)(n-c+1)/2. Requires 1 <= c <= n.
std::int64_t max_edges(std::int64_t n, std::int64_t c);

struct PowerIterationOptions {
  double tolerance = 1e-12;
  std::int64_t max_iterations = 1'000'000;
};

/// Largest adjacency eigenvalue by power iteration on A + I from the
/// normalized all-ones vector. Throws ConvergenceError at the cap.
double spectral_radius(const Graph& g, const PowerIterationOptions& options = {});

/// Collatz-Sinogowitz irregularity: spectral radius minus mean degree.
double cs_irregularity(const Graph& g, const PowerIterationOptions& options = {});

/// (Delta - delta) / sqrt(Delta delta) * sqrt(|E| * M2). Requires a connected
/// graph with n >= 2 and minimum degree >= 1.
double albertson_upper_bound(const Graph& g);

/// Upper bound on total sigma over connected graphs of order n >= 3.
std::int64_t sigma_t_upper_bound(std::int64_t n);

/// Maximum of spectral radius minus mean degree over all graphs of order
/// n >= 2: n/4 - 1/2, plus 1/(4n) when n is odd.
double bell_max_cs(std::int64_t n);

IndexBundle compute_indices(const Graph& g, const PowerIterationOptions& options = {});

}  // namespace irrlab
