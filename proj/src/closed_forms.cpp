#include "irrlab/closed_forms.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <utility>

#include "irrlab/error.hpp"

namespace irrlab::claims {
namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 28> kClaimNames{{
    {ClaimId::IrrCat, "IRR-CAT"},
    {ClaimId::SigCat, "SIG-CAT"},
    {ClaimId::SigKmn, "SIG-KMN"},
    {ClaimId::SigDstar, "SIG-DSTAR"},
    {ClaimId::IrrStar, "IRR-STAR"},
    {ClaimId::IrrTreeMax, "IRR-TREE-MAX"},
    {ClaimId::SigTreeMax, "SIG-TREE-MAX"},
    {ClaimId::SigTreeMin, "SIG-TREE-MIN"},
    {ClaimId::IrrSpine, "IRR-SPINE"},
    {ClaimId::Hy1Order, "HY1-ORDER"},
    {ClaimId::HySig3, "HY-SIG3"},
    {ClaimId::HySig3Max, "HY-SIG3-MAX"},
    {ClaimId::HySig3Min, "HY-SIG3-MIN"},
    {ClaimId::HySig4, "HY-SIG4"},
    {ClaimId::IrrSeq4PyMax, "IRR-SEQ4-PY-MAX"},
    {ClaimId::IrrSeq4PyMin, "IRR-SEQ4-PY-MIN"},
    {ClaimId::IrrSeq4Hyp, "IRR-SEQ4-HYP"},
    {ClaimId::IrrCnn, "IRR-CNN"},
    {ClaimId::BellMax, "BELL-MAX"},
    {ClaimId::SigtBound, "SIGT-BOUND"},
    {ClaimId::IrrtGhal, "IRRT-GHAL"},
    {ClaimId::Lem3Bound, "LEM3-BOUND"},
    {ClaimId::MaxEdges, "MAXEDGES"},
    {ClaimId::Table1Irr, "TABLE1-IRR"},
    {ClaimId::Table1Sig, "TABLE1-SIG"},
    {ClaimId::Lem2ProseSig, "LEM2-PROSE-SIG"},
    {ClaimId::Lem2ProseSigt, "LEM2-PROSE-SIGT"},
    {ClaimId::SigSeq4Example, "SIG-SEQ4-EX"},
}};

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

std::int64_t sq(std::int64_t x) { return x * x; }
std::int64_t cube(std::int64_t x) { return x * x * x; }

}  // namespace

std::string_view to_string(ClaimId id) {
  for (const auto& [key, name] : kClaimNames) {
    if (key == id) return name;
  }
  return "UNKNOWN";
}

std::optional<ClaimId> claim_from_string(std::string_view text) {
  for (const auto& [key, name] : kClaimNames) {
    if (name == text) return key;
  }
  return std::nullopt;
}

std::int64_t irr_star_claimed(std::int64_t n) {
  require(n >= 2, "star irr formula needs n >= 2");
  return (n - 2) * (n - 1);
}

std::int64_t irr_caterpillar_claimed(std::int64_t n, std::int64_t m) {
  require(n >= 1 && m >= 1, "caterpillar irr formula needs n >= 1 and m >= 1");
  const std::int64_t base = m * (m + 1) * n - 2 * m;
  return n >= 3 ? base + 2 : base;
}

std::int64_t sigma_caterpillar_claimed(std::int64_t n, std::int64_t m) {
  require(n >= 2 && m >= 1, "caterpillar sigma formula needs n >= 2 and m >= 1");
  return n == 2 ? 2 * cube(m) : 2 * cube(m) + m - 2;
}

std::int64_t sigma_complete_bipartite_claimed(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "K_{m,n} sigma formula needs m, n >= 1");
  return m * n * sq(n - m);
}

std::int64_t sigma_double_star_claimed(std::int64_t r, std::int64_t k) {
  require(r >= 1 && k >= 2, "double star sigma formula needs r >= 1 and k >= 2");
  return cube(k - 1) + sq(k) + cube(r - 1) + sq(r) - 2 * k * r;
}

std::int64_t irr_spine_claimed(const SpineSequence& seq) {
  const auto& d = seq.degrees;
  require(d.size() >= 2 && seq.realizable(),
          "spine irr formula needs a realizable sequence of length >= 2");
  const std::size_t n = d.size();
  std::int64_t total = sq(d[n - 1] - 1) + sq(d[0] - 1);
  for (std::size_t i = 1; i + 1 < n; ++i) total += std::int64_t{d[i] - 1} * (d[i] - 2);
  for (std::size_t i = 0; i + 1 < n; ++i) total += std::abs(d[i] - d[i + 1]);
  return total;
}

std::int64_t sigma_spine3_expression(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  std::int64_t middle = 0;
  for (std::int64_t d : {d1, d2, d3}) middle += (d - 1) * (d - 2);
  return cube(d1 - 1) + middle + cube(d3 - 1);
}

std::int64_t sigma_spine3_claimed(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  require(d1 >= 1 && d2 >= d1 && d3 >= d2,
          "three-vertex sigma formula needs d3 >= d2 >= d1 >= 1");
  return sigma_spine3_expression(d1, d2, d3);
}

std::int64_t sigma_spine3_max_claimed(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  return cube(d1) - 2 * sq(d1) + d1 + cube(d2) + cube(d3) - 4 * d2 * sq(d3);
}

std::int64_t sigma_spine3_min_claimed(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  return cube(d1) - 2 * sq(d1) + d1 + cube(d2) + 2 * sq(d2) * (1 - d3) + d2 * sq(d3);
}

Seq4Sigma sigma_seq4_claimed(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t d4) {
  const std::array<std::int64_t, 4> d{d1, d2, d3, d4};
  std::int64_t cubes = 0, squares = 0, linear = 0, adjacent = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    cubes += cube(d[i]);
    squares += sq(d[i]);
    linear += d[i];
    if (i < 3) adjacent += d[i] * d[i + 1];
  }
  const bool consecutive = d1 > 0 && d2 == d1 + 1 && d3 == d2 + 1 && d4 == d3 + 1;
  return {cubes + 2 * squares + linear - 2 * adjacent, consecutive};
}

std::int64_t irr_seq4_py_max(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const std::int64_t x = sq(a - 1) + sq(b - 1) + sq(c - 1) + sq(d - 1);
  const std::int64_t y = a + b - c - 3 * d + 2;
  return x + y;
}

std::int64_t irr_seq4_py_min(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const std::int64_t z = sq(a - 1) + sq(b - 1) + sq(c - 1) + sq(d - 1);
  const std::int64_t m = a - b - c - d + 2;
  return z + m;
}

std::int64_t irr_seq4_hyp(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  require(d > a && a >= b && b >= c && c >= 1,
          "four-term irr hypothesis needs d > a >= b >= c >= 1");
  return sq(a - 1) + sq(b - 1) + sq(c - 1) + (d - a) + (d - b) + (d - c) + (d - 1) * (d - 3);
}

std::int64_t irr_caterpillar_nn_claimed(std::int64_t n) {
  require(n >= 3, "C(n,n) irr corollary needs n >= 3");
  return cube(n) + sq(n) - 2 * n + 2;
}

TreeSigmaExtremes sigma_tree_extremes_claimed(std::int64_t n) {
  require(n >= 2, "tree sigma extremes need n >= 2");
  TreeSigmaExtremes out;
  if (n >= 3) out.max = (n - 1) * (n - 2);
  if (n == 2) out.min = 0;
  return out;
}

}  // namespace irrlab::claims
