#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "irrlab/generators.hpp"

// Closed-form expressions exactly as stated. Nothing here is corrected:
// the verify module decides which of them agree with direct computation.
namespace irrlab::claims {

/// Stable identifiers keying every report row.
enum class ClaimId {
  IrrCat,
  SigCat,
  SigKmn,
  SigDstar,
  IrrStar,
  IrrTreeMax,
  SigTreeMax,
  SigTreeMin,
  IrrSpine,
  Hy1Order,
  HySig3,
  HySig3Max,
  HySig3Min,
  HySig4,
  IrrSeq4PyMax,
  IrrSeq4PyMin,
  IrrSeq4Hyp,
  IrrCnn,
  BellMax,
  SigtBound,
  IrrtGhal,
  Lem3Bound,
  MaxEdges,
  Table1Irr,
  Table1Sig,
  Lem2ProseSig,
  Lem2ProseSigt,
  SigSeq4Example,
};

std::string_view to_string(ClaimId id);
std::optional<ClaimId> claim_from_string(std::string_view text);

/// irr of the star on n >= 2 vertices: (n-2)(n-1).
std::int64_t irr_star_claimed(std::int64_t n);

/// irr of C(n,m): m(m+1)n - 2m + 2 for n >= 3, m(m+1)n - 2m for n in {1,2}.
std::int64_t irr_caterpillar_claimed(std::int64_t n, std::int64_t m);

/// sigma of C(n,m): 2m^3 for n = 2, 2m^3 + m - 2 for n >= 3.
std::int64_t sigma_caterpillar_claimed(std::int64_t n, std::int64_t m);

/// sigma(K_{m,n}) = mn(n-m)^2.
std::int64_t sigma_complete_bipartite_claimed(std::int64_t m, std::int64_t n);

/// sigma of the double star with centre degrees k (>= 2) and r (>= 1):
/// (k-1)^3 + k^2 + (r-1)^3 + r^2 - 2kr.
std::int64_t sigma_double_star_claimed(std::int64_t r, std::int64_t k);

/// irr of a caterpillar with spine degrees d_1..d_n (n >= 2):
/// (d_n-1)^2 + (d_1-1)^2 + sum_{2..n-1} (d_i-1)(d_i-2) + sum |d_i - d_{i+1}|.
std::int64_t irr_spine_claimed(const SpineSequence& seq);

/// (d1-1)^3 + sum_{i=1..3} (d_i-1)(d_i-2) + (d3-1)^3, for any arrangement.
std::int64_t sigma_spine3_expression(std::int64_t d1, std::int64_t d2, std::int64_t d3);

/// Same expression with the stated ordering d3 >= d2 >= d1 >= 1 enforced.
std::int64_t sigma_spine3_claimed(std::int64_t d1, std::int64_t d2, std::int64_t d3);

/// Final max/min expressions attached to the three-vertex sigma claim.
std::int64_t sigma_spine3_max_claimed(std::int64_t d1, std::int64_t d2, std::int64_t d3);
std::int64_t sigma_spine3_min_claimed(std::int64_t d1, std::int64_t d2, std::int64_t d3);

struct Seq4Sigma {
  std::int64_t value;
  bool condition_held;  // d1 >= 1 and each next entry is the previous plus one
};

/// sum d^3 + 2 sum d^2 + sum d - 2 sum_{i=1..3} d_i d_{i+1}
Seq4Sigma sigma_seq4_claimed(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t d4);

// The helper script for four spine degrees, transcribed literally.
std::int64_t irr_seq4_py_max(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
std::int64_t irr_seq4_py_min(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// (a-1)^2 + (b-1)^2 + (c-1)^2 + (d-a) + (d-b) + (d-c) + (d-1)(d-3), for
/// d > a >= b >= c >= 1.
std::int64_t irr_seq4_hyp(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// irr(C(n,n)) = n^3 + n^2 - 2n + 2 for n >= 3.
std::int64_t irr_caterpillar_nn_claimed(std::int64_t n);

/// Tree sigma extremes as stated: max (n-1)(n-2) for n >= 3, min 0 at n = 2.
/// A side with no stated value is empty.
struct TreeSigmaExtremes {
  std::optional<std::int64_t> max;
  std::optional<std::int64_t> min;
};
TreeSigmaExtremes sigma_tree_extremes_claimed(std::int64_t n);

}  // namespace irrlab::claims
