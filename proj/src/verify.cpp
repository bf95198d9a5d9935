#include "irrlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/indices.hpp"
#include "irrlab/parallel.hpp"

namespace irrlab::verify {
namespace {

using claims::ClaimId;

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

std::string range_text(IntRange r) {
  return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

void require_within(IntRange r, int lo, int hi, std::string_view what) {
  require(r.lo >= lo && r.lo <= r.hi && r.hi <= hi,
          std::string(what) + " range " + range_text(r) + " must lie within [" +
              std::to_string(lo) + "," + std::to_string(hi) + "]");
}

std::vector<Param> degree_params(const std::vector<int>& d, std::string_view prefix = "d") {
  std::vector<Param> out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.push_back({std::string(prefix) + std::to_string(i + 1), d[i]});
  }
  return out;
}

std::int64_t direct_spine(const std::vector<int>& degrees, SpineIndex index) {
  const Graph g = caterpillar_from_spine(SpineSequence{degrees});
  return index == SpineIndex::Irr ? albertson_irr(g) : sigma(g);
}

/// Calls visit(seq) for every spine sequence of the given length with end
/// entries in [1, max_degree] and interior entries in [2, max_degree].
template <typename Visit>
void for_each_spine(int length, int max_degree, Visit&& visit) {
  std::vector<int> seq(length);
  auto floor_at = [&](int i) { return (i == 0 || i == length - 1) ? 1 : 2; };
  for (int i = 0; i < length; ++i) seq[i] = floor_at(i);
  if (max_degree < 2 && length > 2) return;
  while (true) {
    visit(seq);
    int i = length - 1;
    while (i >= 0 && seq[i] == max_degree) {
      seq[i] = floor_at(i);
      --i;
    }
    if (i < 0) return;
    ++seq[i];
  }
}

/// Multisets of `length` values from [lo, hi], each as a non-increasing list.
std::vector<std::vector<int>> descending_multisets(int length, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int upper) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int v = upper; v >= lo; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, hi);
  return out;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::BoundHolds: return "bound_holds";
    case Status::BoundViolated: return "bound_violated";
    case Status::Unverifiable: return "unverifiable";
  }
  return "unknown";
}

Value ClaimRecord::delta() const {
  if (std::holds_alternative<std::monostate>(claimed) ||
      std::holds_alternative<std::monostate>(computed)) {
    return std::monostate{};
  }
  if (const auto* a = std::get_if<std::int64_t>(&computed)) {
    if (const auto* b = std::get_if<std::int64_t>(&claimed)) return *a - *b;
  }
  auto as_real = [](const Value& v) {
    return std::holds_alternative<double>(v) ? std::get<double>(v)
                                             : static_cast<double>(std::get<std::int64_t>(v));
  };
  return as_real(computed) - as_real(claimed);
}

std::optional<std::int64_t> ClaimRecord::param(std::string_view name) const {
  for (const auto& p : params) {
    if (p.name == name) return p.value;
  }
  return std::nullopt;
}

ClaimRecord exact_record(ClaimId id, std::vector<Param> params, std::int64_t claimed,
                         std::int64_t computed, Expectation expectation) {
  return {id, std::move(params), claimed, computed,
          claimed == computed ? Status::Match : Status::Mismatch, expectation};
}

ClaimRecord real_record(ClaimId id, std::vector<Param> params, double claimed, double computed,
                        double tolerance, Expectation expectation) {
  const bool ok = std::abs(computed - claimed) <= tolerance;
  return {id, std::move(params), claimed, computed, ok ? Status::Match : Status::Mismatch,
          expectation};
}

ClaimRecord bound_record(ClaimId id, std::vector<Param> params, Value claimed, Value computed,
                         bool holds) {
  return {id,
          std::move(params),
          claimed,
          computed,
          holds ? Status::BoundHolds : Status::BoundViolated,
          Expectation::Bound};
}

ClaimRecord unverifiable_record(ClaimId id, std::vector<Param> params, Value claimed) {
  return {id,      std::move(params),    claimed, std::monostate{}, Status::Unverifiable,
          Expectation::Unverifiable};
}

bool record_less(const ClaimRecord& a, const ClaimRecord& b) {
  const auto ia = claims::to_string(a.claim);
  const auto ib = claims::to_string(b.claim);
  if (ia != ib) return ia < ib;
  const std::size_t common = std::min(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.params[i].name != b.params[i].name) return a.params[i].name < b.params[i].name;
    if (a.params[i].value != b.params[i].value) return a.params[i].value < b.params[i].value;
  }
  return a.params.size() < b.params.size();
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Grid: return "grid";
    case Suite::Table1: return "table1";
    case Suite::Closed: return "closed";
    case Suite::Bounds: return "bounds";
    case Suite::Lemma2: return "lemma2";
    case Suite::Bell: return "bell";
    case Suite::Hy1: return "hy1";
  }
  return "unknown";
}

std::vector<Suite> parse_suites(std::string_view text) {
  const std::vector<Suite> every{Suite::Grid,   Suite::Table1, Suite::Closed, Suite::Bounds,
                                 Suite::Lemma2, Suite::Bell,   Suite::Hy1};
  if (text == "all") return every;
  if (text == "claims") {
    std::vector<Suite> out;
    for (Suite s : every) {
      if (s != Suite::Bounds) out.push_back(s);
    }
    return out;
  }
  std::vector<Suite> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto name = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    const auto it = std::find_if(every.begin(), every.end(),
                                 [&](Suite s) { return to_string(s) == name; });
    require(it != every.end(), "unknown suite '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void validate(const VerifyConfig& c) {
  require_within(c.grid_n, 1, kCaterpillarVertexCap, "caterpillar n");
  require_within(c.grid_m, 1, kCaterpillarVertexCap, "caterpillar m");
  require(c.grid_n.hi * (c.grid_m.hi + 1) <= kCaterpillarVertexCap,
          "caterpillar grid exceeds the n(m+1) <= " + std::to_string(kCaterpillarVertexCap) +
              " vertex cap");
  require(c.spine_max_length >= 2 && c.spine_max_length <= 6, "spine length cap is [2,6]");
  require(c.spine_max_degree >= 2 && c.spine_max_degree <= 7, "spine degree cap is [2,7]");
  require(c.sequence_max_degree >= 4 && c.sequence_max_degree <= 10,
          "sequence degree cap is [4,10]");
  require(c.max_tree_n >= 2 && c.max_tree_n <= kSuiteTreeCap,
          "tree order cap for suites is " + std::to_string(kSuiteTreeCap));
  require(c.max_graph_n >= 2 && c.max_graph_n <= kSuiteGraphCap,
          "graph order cap for suites is " + std::to_string(kSuiteGraphCap));
  require_within(c.lemma2_n, 2, kExtremalTreeCap, "tree extremes n");
  require_within(c.bell_n, 2, kSuiteGraphCap, "Bell n");
  require(c.hy1_max_length >= 2 && c.hy1_max_length <= 6, "hy1 grid length cap is [2,6]");
  require(c.hy1_max_degree >= 2 && c.hy1_max_degree <= 8, "hy1 grid degree cap is [2,8]");
  require(c.power.tolerance > 0.0 && c.power.max_iterations >= 1,
          "power iteration needs a positive tolerance and at least one iteration");
}

// ---------------------------------------------------------------------------

std::vector<ClaimRecord> check_caterpillar_grid(IntRange n_range, IntRange m_range) {
  require_within(n_range, 1, kCaterpillarVertexCap, "caterpillar n");
  require_within(m_range, 1, kCaterpillarVertexCap, "caterpillar m");
  require(n_range.hi * (m_range.hi + 1) <= kCaterpillarVertexCap,
          "caterpillar grid exceeds the n(m+1) <= " + std::to_string(kCaterpillarVertexCap) +
              " vertex cap");
  std::vector<ClaimRecord> out;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
      const Graph g = caterpillar_uniform({n, m});
      out.push_back(exact_record(ClaimId::IrrCat, {{"n", n}, {"m", m}},
                                 claims::irr_caterpillar_claimed(n, m), albertson_irr(g),
                                 Expectation::Match));
      if (n >= 2) {
        out.push_back(exact_record(ClaimId::SigCat, {{"n", n}, {"m", m}},
                                   claims::sigma_caterpillar_claimed(n, m), sigma(g),
                                   n == 2 ? Expectation::Match : Expectation::Mismatch));
      }
    }
  }
  return out;
}

const std::vector<Table1Row>& published_table1() {
  static const std::vector<Table1Row> rows{
      {3, 3, 32, 55, 23, 55, 0, 0},
      {3, 6, 116, 436, 320, 436, 0, 0},
      {3, 7, 156, 691, 535, 691, 0, 0},
      {3, 9, 254, 1465, 1211, 1465, 0, 0},
      {4, 3, 44, 55, 11, 55, 0, 0},
      {4, 4, 74, 130, 56, 130, 0, 0},
      {4, 7, 212, 691, 479, 691, 0, 0},
      {4, 9, 344, 1465, 1121, 1465, 0, 0},
      {4, 10, 422, 2008, 1586, 2008, 0, 0},
      {5, 3, 56, 55, -1, 56, 0, 0},
      {5, 6, 200, 436, 236, 436, 0, 0},
      {5, 7, 268, 691, 423, 691, 0, 0},
      {5, 9, 434, 1465, 1031, 1465, 0, 0},
      {6, 3, 68, 55, -13, 68, 0, 0},
      {6, 4, 114, 130, 16, 130, 0, 0},
      {6, 7, 324, 691, 367, 691, 0, 0},
      {6, 9, 524, 1465, 941, 1465, 0, 0},
      {6, 10, 642, 2008, 1366, 2008, 0, 0},
      {7, 3, 80, 55, -25, 80, 0, 0},
      {7, 5, 202, 253, 51, 253, 0, 0},
      {7, 7, 380, 691, 311, 691, 0, 0},
      {7, 8, 490, 1030, 540, 1030, 0, 0},
      {7, 9, 614, 1465, 851, 1465, 0, 0},
      {7, 10, 752, 2008, 1256, 2008, 0, 0},
      {8, 3, 92, 55, -37, 92, 0, 0},
      {8, 5, 232, 253, 21, 253, 0, 0},
      {8, 7, 436, 691, 255, 691, 0, 0},
      {8, 8, 562, 1030, 468, 1030, 0, 0},
      {8, 10, 862, 2008, 1146, 2008, 0, 0},
      {9, 3, 104, 55, -49, 104, 0, 0},
      {9, 5, 262, 253, -9, 262, 0, 0},
      {9, 7, 492, 691, 199, 691, 0, 0},
      {9, 8, 634, 1030, 396, 1030, 0, 0},
      {9, 9, 794, 1465, 671, 1465, 0, 0},
      {9, 10, 972, 2008, 1036, 2008, 0, 0},
      {10, 3, 116, 55, -61, 116, 0, 0},
      {10, 5, 292, 253, -39, 292, 0, 0},
      {10, 7, 548, 691, 143, 691, 0, 0},
      {10, 8, 706, 1030, 324, 1030, 0, 0},
      {10, 10, 1082, 2008, 926, 2008, 0, 0},
  };
  return rows;
}

Table1 reproduce_table1() {
  Table1 table{{}, true};
  for (const auto& printed : published_table1()) {
    Table1Row row{};
    row.n = printed.n;
    row.m = printed.m;
    row.irr = claims::irr_caterpillar_claimed(row.n, row.m);
    row.sigma = claims::sigma_caterpillar_claimed(row.n, row.m);
    row.sigma_minus_irr = row.sigma - row.irr;
    row.max_of_both = std::max(row.sigma, row.irr);
    const Graph g = caterpillar_uniform({row.n, row.m});
    row.irr_direct = albertson_irr(g);
    row.sigma_direct = sigma(g);
    table.exact = table.exact && row.irr == printed.irr && row.sigma == printed.sigma &&
                  row.sigma_minus_irr == printed.sigma_minus_irr &&
                  row.max_of_both == printed.max_of_both;
    table.rows.push_back(row);
  }
  return table;
}

std::vector<ClaimRecord> table1_records(const Table1& table) {
  const auto& printed = published_table1();
  std::vector<ClaimRecord> out;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::vector<Param> params{{"n", row.n}, {"m", row.m}};
    out.push_back(exact_record(ClaimId::Table1Irr, params, printed[i].irr, row.irr,
                               Expectation::Match));
    out.push_back(exact_record(ClaimId::Table1Sig, params, printed[i].sigma, row.sigma,
                               Expectation::Match));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ClaimRecord> check_star_irr(IntRange n_range) {
  require_within(n_range, 2, kCaterpillarVertexCap, "star n");
  std::vector<ClaimRecord> out;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    out.push_back(exact_record(ClaimId::IrrStar, {{"n", n}}, claims::irr_star_claimed(n),
                               albertson_irr(star(n)), Expectation::Match));
  }
  return out;
}

std::vector<ClaimRecord> check_double_star_sigma(IntRange r_range, IntRange k_range) {
  require_within(r_range, 1, kCaterpillarVertexCap, "double star r");
  require_within(k_range, 2, kCaterpillarVertexCap, "double star k");
  std::vector<ClaimRecord> out;
  for (int r = r_range.lo; r <= r_range.hi; ++r) {
    for (int k = k_range.lo; k <= k_range.hi; ++k) {
      out.push_back(exact_record(ClaimId::SigDstar, {{"r", r}, {"k", k}},
                                 claims::sigma_double_star_claimed(r, k), sigma(double_star(r, k)),
                                 Expectation::Match));
    }
  }
  return out;
}

std::vector<ClaimRecord> check_complete_bipartite_sigma(IntRange m_range, IntRange n_range) {
  require_within(m_range, 1, kCaterpillarVertexCap, "K_{m,n} m");
  require_within(n_range, 1, kCaterpillarVertexCap, "K_{m,n} n");
  std::vector<ClaimRecord> out;
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      out.push_back(exact_record(ClaimId::SigKmn, {{"m", m}, {"n", n}},
                                 claims::sigma_complete_bipartite_claimed(m, n),
                                 sigma(complete_bipartite(m, n)), Expectation::Match));
    }
  }
  return out;
}

std::vector<ClaimRecord> check_spine_irr(int max_length, int max_degree) {
  require(max_length >= 2 && max_length <= 6, "spine length cap is [2,6]");
  require(max_degree >= 2 && max_degree <= 7, "spine degree cap is [2,7]");
  std::vector<ClaimRecord> out;
  for (int len = 2; len <= max_length; ++len) {
    for_each_spine(len, max_degree, [&](const std::vector<int>& seq) {
      out.push_back(exact_record(ClaimId::IrrSpine, degree_params(seq),
                                 claims::irr_spine_claimed(SpineSequence{seq}),
                                 direct_spine(seq, SpineIndex::Irr), Expectation::Match));
    });
  }
  return out;
}

std::vector<ClaimRecord> check_caterpillar_nn(IntRange n_range) {
  require_within(n_range, 3, 13, "C(n,n) n");
  std::vector<ClaimRecord> out;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    out.push_back(exact_record(ClaimId::IrrCnn, {{"n", n}}, claims::irr_caterpillar_nn_claimed(n),
                               albertson_irr(caterpillar_uniform({n, n})), Expectation::Match));
  }
  return out;
}

std::vector<ClaimRecord> check_max_edges(int max_n) {
  require(max_n >= 1 && max_n <= kSuiteGraphCap,
          "graph order cap for suites is " + std::to_string(kSuiteGraphCap));
  std::vector<ClaimRecord> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::int64_t> best(n + 1, -1);
    for_each_graph(n, false, [&](std::uint64_t, const Graph& g) {
      auto& slot = best[component_count(g)];
      slot = std::max<std::int64_t>(slot, static_cast<std::int64_t>(g.edge_count()));
    });
    for (int c = 1; c <= n; ++c) {
      out.push_back(exact_record(ClaimId::MaxEdges, {{"n", n}, {"c", c}}, max_edges(n, c),
                                 best[c], Expectation::Match));
    }
  }
  return out;
}

std::optional<ArrangementExtremes> arrangement_extremes(std::vector<int> degrees,
                                                        SpineIndex index) {
  std::sort(degrees.begin(), degrees.end());
  std::optional<ArrangementExtremes> out;
  do {
    if (!SpineSequence{degrees}.realizable()) continue;
    const std::int64_t value = direct_spine(degrees, index);
    if (!out) {
      out = ArrangementExtremes{value, value, degrees, degrees, 1};
      continue;
    }
    ++out->realizable;
    if (value > out->max_value) {
      out->max_value = value;
      out->argmax = degrees;
    }
    if (value < out->min_value) {
      out->min_value = value;
      out->argmin = degrees;
    }
  } while (std::next_permutation(degrees.begin(), degrees.end()));
  return out;
}

std::vector<ClaimRecord> check_sigma_spine3(int max_degree) {
  require(max_degree >= 2 && max_degree <= 10, "sequence degree cap is [2,10]");
  std::vector<ClaimRecord> out;
  for (int d1 = 1; d1 <= max_degree; ++d1) {
    for (int d2 = std::max(d1, 2); d2 <= max_degree; ++d2) {
      for (int d3 = d2; d3 <= max_degree; ++d3) {
        const std::vector<int> seq{d1, d2, d3};
        const auto params = degree_params(seq);
        out.push_back(exact_record(ClaimId::HySig3, params,
                                   claims::sigma_spine3_claimed(d1, d2, d3),
                                   direct_spine(seq, SpineIndex::Sigma), Expectation::Open));
        const auto ext = arrangement_extremes(seq, SpineIndex::Sigma);
        out.push_back(exact_record(ClaimId::HySig3Max, params,
                                   claims::sigma_spine3_max_claimed(d1, d2, d3), ext->max_value,
                                   Expectation::Open));
        out.push_back(exact_record(ClaimId::HySig3Min, params,
                                   claims::sigma_spine3_min_claimed(d1, d2, d3), ext->min_value,
                                   Expectation::Open));
      }
    }
  }
  return out;
}

std::vector<ClaimRecord> check_sigma_seq4(int max_degree) {
  require(max_degree >= 4 && max_degree <= 10, "sequence degree cap is [4,10]");
  std::vector<ClaimRecord> out;
  for (int s = 1; s + 3 <= max_degree; ++s) {
    const std::vector<int> seq{s, s + 1, s + 2, s + 3};
    const auto claimed = claims::sigma_seq4_claimed(s, s + 1, s + 2, s + 3);
    out.push_back(exact_record(ClaimId::HySig4, degree_params(seq), claimed.value,
                               direct_spine(seq, SpineIndex::Sigma), Expectation::Open));
  }
  return out;
}

std::vector<ClaimRecord> check_seq4_irr(int max_degree) {
  require(max_degree >= 2 && max_degree <= 10, "sequence degree cap is [2,10]");
  std::set<std::vector<int>> inputs;
  for (auto& v : descending_multisets(4, 1, max_degree)) inputs.insert(v);
  inputs.insert({10, 8, 3, 2});
  inputs.insert({8, 5, 3, 2});

  std::vector<ClaimRecord> out;
  for (const auto& v : inputs) {
    const auto ext = arrangement_extremes(v, SpineIndex::Irr);
    if (!ext) continue;  // more than two unit degrees
    const std::vector<Param> params{{"a", v[0]}, {"b", v[1]}, {"c", v[2]}, {"d", v[3]}};
    out.push_back(exact_record(ClaimId::IrrSeq4PyMax, params,
                               claims::irr_seq4_py_max(v[0], v[1], v[2], v[3]), ext->max_value,
                               Expectation::Open));
    out.push_back(exact_record(ClaimId::IrrSeq4PyMin, params,
                               claims::irr_seq4_py_min(v[0], v[1], v[2], v[3]), ext->min_value,
                               Expectation::Open));
    // Hypothesis labels: the largest entry plays d, the rest a >= b >= c.
    if (v[0] > v[1]) {
      out.push_back(exact_record(ClaimId::IrrSeq4Hyp,
                                 {{"a", v[1]}, {"b", v[2]}, {"c", v[3]}, {"d", v[0]}},
                                 claims::irr_seq4_hyp(v[1], v[2], v[3], v[0]), ext->min_value,
                                 Expectation::Open));
    }
  }
  return out;
}

std::vector<ClaimRecord> sequence_example_constants() {
  struct Quoted {
    int a, b, c, d;
    std::int64_t sigma;
  };
  constexpr Quoted quoted[]{
      {10, 8, 3, 2, 1036}, {8, 10, 3, 2, 1048}, {3, 10, 8, 2, 1148}, {2, 10, 8, 3, 1156}};
  std::vector<ClaimRecord> out;
  for (const auto& q : quoted) {
    out.push_back(unverifiable_record(ClaimId::SigSeq4Example,
                                      {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}}, q.sigma));
  }
  return out;
}

std::vector<ClaimRecord> check_closed_forms(const VerifyConfig& config) {
  std::vector<ClaimRecord> out;
  auto append = [&](std::vector<ClaimRecord> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  append(check_star_irr({2, 12}));
  append(check_double_star_sigma({1, 10}, {2, 10}));
  append(check_complete_bipartite_sigma({1, 10}, {1, 10}));
  append(check_spine_irr(config.spine_max_length, config.spine_max_degree));
  append(check_caterpillar_nn({3, 12}));
  append(check_max_edges(config.max_graph_n));
  append(check_sigma_spine3(config.sequence_max_degree));
  append(check_sigma_seq4(config.sequence_max_degree));
  append(check_seq4_irr(config.sequence_max_degree));
  append(sequence_example_constants());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct BoundAcc {
  double lem3_margin = -std::numeric_limits<double>::infinity();
  std::int64_t sigma_t_max = std::numeric_limits<std::int64_t>::min();
  std::int64_t ghal_linear = std::numeric_limits<std::int64_t>::min();
  double ghal_quadratic = -std::numeric_limits<double>::infinity();

  void add(const Graph& g, bool tree) {
    const auto n = static_cast<std::int64_t>(g.order());
    const std::int64_t irr = albertson_irr(g);
    lem3_margin = std::max(lem3_margin, static_cast<double>(irr) - albertson_upper_bound(g));
    sigma_t_max = std::max(sigma_t_max, total_sigma(g));
    if (tree) {
      const std::int64_t irr_t = total_irregularity(g);
      ghal_linear = std::max(ghal_linear, irr_t - (n - 2) * irr);
      ghal_quadratic = std::max(ghal_quadratic, static_cast<double>(irr_t) -
                                                    static_cast<double>(n * n * irr) / 4.0);
    }
  }

  static void merge(BoundAcc& into, const BoundAcc& from) {
    into.lem3_margin = std::max(into.lem3_margin, from.lem3_margin);
    into.sigma_t_max = std::max(into.sigma_t_max, from.sigma_t_max);
    into.ghal_linear = std::max(into.ghal_linear, from.ghal_linear);
    into.ghal_quadratic = std::max(into.ghal_quadratic, from.ghal_quadratic);
  }
};

constexpr double kBoundSlack = 1e-9;

void emit_bounds(std::vector<ClaimRecord>& out, const BoundAcc& acc, int n, bool tree) {
  const std::string order = tree ? "tree_n" : "graph_n";
  out.push_back(bound_record(ClaimId::Lem3Bound, {{order, n}}, 0.0, acc.lem3_margin,
                             acc.lem3_margin <= kBoundSlack));
  if (n >= 3) {
    const std::int64_t bound = sigma_t_upper_bound(n);
    out.push_back(bound_record(ClaimId::SigtBound, {{order, n}}, bound, acc.sigma_t_max,
                               acc.sigma_t_max <= bound));
  }
  if (tree) {
    out.push_back(bound_record(ClaimId::IrrtGhal, {{order, n}, {"form", 1}}, std::int64_t{0},
                               acc.ghal_linear, acc.ghal_linear <= 0));
    out.push_back(bound_record(ClaimId::IrrtGhal, {{order, n}, {"form", 2}}, 0.0,
                               acc.ghal_quadratic, acc.ghal_quadratic <= 0.0));
  }
}

}  // namespace

std::vector<ClaimRecord> check_bounds_suite(int max_tree_n, int max_graph_n) {
  require(max_tree_n >= 2 && max_tree_n <= kSuiteTreeCap,
          "tree order cap for suites is " + std::to_string(kSuiteTreeCap));
  require(max_graph_n >= 2 && max_graph_n <= kSuiteGraphCap,
          "graph order cap for suites is " + std::to_string(kSuiteGraphCap));
  std::vector<ClaimRecord> out;
  for (int n = 2; n <= max_tree_n; ++n) {
    const auto acc = parallel_reduce(
        labeled_tree_count(n), BoundAcc{},
        [n](std::uint64_t begin, std::uint64_t end, BoundAcc& a) {
          for_each_labeled_tree_in_range(n, begin, end, [&](const Graph& g) { a.add(g, true); });
        },
        BoundAcc::merge);
    emit_bounds(out, acc, n, true);
  }
  for (int n = 2; n <= max_graph_n; ++n) {
    const auto acc = parallel_reduce(
        std::uint64_t{1} << pair_count(n), BoundAcc{},
        [n](std::uint64_t begin, std::uint64_t end, BoundAcc& a) {
          for (std::uint64_t mask = begin; mask < end; ++mask) {
            const Graph g = graph_from_mask(n, mask);
            if (is_connected(g)) a.add(g, false);
          }
        },
        BoundAcc::merge);
    emit_bounds(out, acc, n, false);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct ExtremeSet {
  std::int64_t value;
  std::set<DegreeSequence> witnesses;

  void offer(std::int64_t v, const Graph& g, bool want_max) {
    const bool better = want_max ? v > value : v < value;
    if (better) {
      value = v;
      witnesses.clear();
    }
    if (better || v == value) witnesses.insert(degree_sequence(g).sorted_descending());
  }

  void merge(const ExtremeSet& other, bool want_max) {
    const bool better = want_max ? other.value > value : other.value < value;
    if (better) {
      *this = other;
    } else if (other.value == value) {
      witnesses.insert(other.witnesses.begin(), other.witnesses.end());
    }
  }
};

struct ExtremalAcc {
  ExtremeSet max_irr{std::numeric_limits<std::int64_t>::min(), {}};
  ExtremeSet min_irr{std::numeric_limits<std::int64_t>::max(), {}};
  ExtremeSet max_sigma{std::numeric_limits<std::int64_t>::min(), {}};
  ExtremeSet min_sigma{std::numeric_limits<std::int64_t>::max(), {}};

  void add(const Graph& g) {
    const std::int64_t irr = albertson_irr(g);
    const std::int64_t sig = sigma(g);
    max_irr.offer(irr, g, true);
    min_irr.offer(irr, g, false);
    max_sigma.offer(sig, g, true);
    min_sigma.offer(sig, g, false);
  }
};

std::vector<DegreeSequence> to_vector(const std::set<DegreeSequence>& s) {
  // Descending lexicographic order lists the most skewed witness first.
  return {s.rbegin(), s.rend()};
}

}  // namespace

ExtremalTrees extremal_trees(int n) {
  require(n >= 2 && n <= kExtremalTreeCap,
          "extremal tree search needs 2 <= n <= " + std::to_string(kExtremalTreeCap) + ", got " +
              std::to_string(n));
  const std::uint64_t count = labeled_tree_count(n);
  const auto acc = parallel_reduce(
      count, ExtremalAcc{},
      [n](std::uint64_t begin, std::uint64_t end, ExtremalAcc& a) {
        for_each_labeled_tree_in_range(n, begin, end, [&](const Graph& g) { a.add(g); });
      },
      [](ExtremalAcc& into, const ExtremalAcc& from) {
        into.max_irr.merge(from.max_irr, true);
        into.min_irr.merge(from.min_irr, false);
        into.max_sigma.merge(from.max_sigma, true);
        into.min_sigma.merge(from.min_sigma, false);
      });
  return {n,
          count,
          acc.max_irr.value,
          acc.min_irr.value,
          acc.max_sigma.value,
          acc.min_sigma.value,
          to_vector(acc.max_irr.witnesses),
          to_vector(acc.min_irr.witnesses),
          to_vector(acc.max_sigma.witnesses),
          to_vector(acc.min_sigma.witnesses)};
}

std::vector<ClaimRecord> check_lemma2(IntRange n_range) {
  require_within(n_range, 2, kExtremalTreeCap, "tree extremes n");
  std::vector<ClaimRecord> out;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    const auto ext = extremal_trees(n);
    const auto stated = claims::sigma_tree_extremes_claimed(n);
    if (stated.max) {
      out.push_back(exact_record(ClaimId::SigTreeMax, {{"n", n}}, *stated.max, ext.max_sigma,
                                 n == 3 ? Expectation::Match : Expectation::Mismatch));
    }
    if (stated.min) {
      out.push_back(exact_record(ClaimId::SigTreeMin, {{"n", n}}, *stated.min, ext.min_sigma,
                                 Expectation::Match));
    }
    out.push_back(exact_record(ClaimId::IrrTreeMax, {{"n", n}}, claims::irr_star_claimed(n),
                               ext.max_irr, Expectation::Match));
    if (n >= 3) {
      out.push_back(unverifiable_record(ClaimId::Lem2ProseSig, {{"n", n}}, std::int64_t{n - 2}));
      out.push_back(unverifiable_record(ClaimId::Lem2ProseSigt, {{"n", n}},
                                        std::int64_t{(n - 1) * (n - 2) * (n - 2)}));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct BellAcc {
  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t mask = 0;
  std::size_t edges = 0;
  std::size_t count = 0;

  // Values within this distance are treated as the same maximum.
  static constexpr double kTie = 1e-9;

  void offer(double value, std::uint64_t m, std::size_t e, std::size_t c) {
    if (value > best + kTie) {
      best = value;
      mask = m;
      edges = e;
      count = c;
    } else if (std::abs(value - best) <= kTie) {
      count += c;
      if (e > edges || (e == edges && m < mask)) {
        mask = m;
        edges = e;
      }
      best = std::max(best, value);
    }
  }
};

}  // namespace

BellSearch bell_search(int n, const PowerIterationOptions& power) {
  require(n >= 2 && n <= kSuiteGraphCap, "Bell search needs 2 <= n <= " +
                                             std::to_string(kSuiteGraphCap) + ", got " +
                                             std::to_string(n));
  const auto acc = parallel_reduce(
      std::uint64_t{1} << pair_count(n), BellAcc{},
      [n, &power](std::uint64_t begin, std::uint64_t end, BellAcc& a) {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const Graph g = graph_from_mask(n, mask);
          a.offer(cs_irregularity(g, power), mask, g.edge_count(), 1);
        }
      },
      [](BellAcc& into, const BellAcc& from) {
        into.offer(from.best, from.mask, from.edges, from.count);
      });
  return {n, acc.best, acc.mask, acc.count};
}

std::vector<ClaimRecord> check_bell(IntRange n_range, const PowerIterationOptions& power) {
  require_within(n_range, 2, kSuiteGraphCap, "Bell n");
  std::vector<ClaimRecord> out;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    const auto found = bell_search(n, power);
    out.push_back(real_record(ClaimId::BellMax, {{"n", n}}, bell_max_cs(n), found.max_value, 1e-6,
                              Expectation::Match));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> hy1_arrangement(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const std::size_t k = degrees.size();
  if (k <= 1) return degrees;
  if (k == 2) return {degrees[1], degrees[0]};
  std::vector<int> a(k);
  a[k - 1] = degrees[0];
  a[0] = degrees[1];
  a[1] = degrees[k - 2];
  a[k - 2] = degrees[k - 1];
  for (std::size_t pos = 2; pos + 2 < k; ++pos) a[pos] = degrees[pos];
  return a;
}

ClaimRecord check_hy1(const std::vector<int>& degrees) {
  require(degrees.size() >= 2, "spine ordering check needs at least two degrees");
  require(degrees.size() <= static_cast<std::size_t>(kHy1MaxLength),
          "spine ordering check is capped at " + std::to_string(kHy1MaxLength) + " degrees");
  for (int d : degrees) require(d >= 1, "spine degrees must be >= 1");

  std::vector<int> sorted = degrees;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const auto ext = arrangement_extremes(sorted, SpineIndex::Irr);
  require(ext.has_value(), "no arrangement of the degrees is a realizable spine");

  auto params = degree_params(sorted);
  const auto pattern = hy1_arrangement(sorted);
  if (!SpineSequence{pattern}.realizable()) {
    return unverifiable_record(ClaimId::Hy1Order, std::move(params), std::monostate{});
  }
  for (auto& p : degree_params(ext->argmax, "argmax")) params.push_back(std::move(p));
  return exact_record(ClaimId::Hy1Order, std::move(params), direct_spine(pattern, SpineIndex::Irr),
                      ext->max_value, Expectation::Open);
}

std::vector<ClaimRecord> check_hy1_grid(int max_length, int max_degree) {
  require(max_length >= 2 && max_length <= 6, "hy1 grid length cap is [2,6]");
  require(max_degree >= 2 && max_degree <= 8, "hy1 grid degree cap is [2,8]");
  std::set<std::vector<int>> inputs{{5, 4}, {5, 4, 3}, {5, 4, 3, 2}, {10, 8, 3, 2}, {8, 5, 3, 2}};
  for (int len = 3; len <= max_length; ++len) {
    for (auto& v : descending_multisets(len, 2, max_degree)) inputs.insert(v);
  }
  std::vector<ClaimRecord> out;
  for (const auto& v : inputs) out.push_back(check_hy1(v));
  return out;
}

// ---------------------------------------------------------------------------

StatusCounts summarize(const Report& report) {
  StatusCounts c;
  for (const auto& r : report.records) {
    switch (r.status) {
      case Status::Match: ++c.match; break;
      case Status::Mismatch: ++c.mismatch; break;
      case Status::BoundHolds: ++c.bound_holds; break;
      case Status::BoundViolated: ++c.bound_violated; break;
      case Status::Unverifiable: ++c.unverifiable; break;
    }
    if (r.expectation == Expectation::Match && r.status == Status::Mismatch) ++c.unexpected;
  }
  return c;
}

bool strict_failure(const Report& report) {
  const auto c = summarize(report);
  return c.bound_violated > 0 || c.unexpected > 0;
}

Report run_all(const VerifyConfig& config) {
  validate(config);
  Report report{config, {}, std::nullopt};
  auto append = [&](std::vector<ClaimRecord> more) {
    report.records.insert(report.records.end(), std::make_move_iterator(more.begin()),
                          std::make_move_iterator(more.end()));
  };
  for (Suite suite : config.suites) {
    switch (suite) {
      case Suite::Grid: append(check_caterpillar_grid(config.grid_n, config.grid_m)); break;
      case Suite::Table1: {
        const auto table = reproduce_table1();
        report.table1_exact = table.exact;
        append(table1_records(table));
        break;
      }
      case Suite::Closed: append(check_closed_forms(config)); break;
      case Suite::Bounds: append(check_bounds_suite(config.max_tree_n, config.max_graph_n)); break;
      case Suite::Lemma2: append(check_lemma2(config.lemma2_n)); break;
      case Suite::Bell: append(check_bell(config.bell_n, config.power)); break;
      case Suite::Hy1: append(check_hy1_grid(config.hy1_max_length, config.hy1_max_degree)); break;
    }
  }
  std::stable_sort(report.records.begin(), report.records.end(), record_less);
  return report;
}

}  // namespace irrlab::verify
