#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "irrlab/closed_forms.hpp"
#include "irrlab/graph.hpp"
#include "irrlab/indices.hpp"

namespace irrlab::verify {

using claims::ClaimId;

enum class Status { Match, Mismatch, BoundHolds, BoundViolated, Unverifiable };

/// What the test suite and --strict expect of a record. Never serialized.
///  - Match / Mismatch: the outcome is known and asserted.
///  - Bound: an inequality that must hold.
///  - Open: adjudicated only; either outcome is a finding.
///  - Unverifiable: a stated constant with nothing to compute it from.
enum class Expectation { Match, Mismatch, Bound, Open, Unverifiable };

std::string_view to_string(Status s);

struct Param {
  std::string name;
  std::int64_t value;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Exact integer, real, or absent (for unverifiable constants).
using Value = std::variant<std::monostate, std::int64_t, double>;

struct ClaimRecord {
  ClaimId claim;
  std::vector<Param> params;
  Value claimed;
  Value computed;
  Status status;
  Expectation expectation;

  /// computed - claimed; empty when either side is absent.
  Value delta() const;
  std::optional<std::int64_t> param(std::string_view name) const;
};

/// Integer claim: match iff equal.
ClaimRecord exact_record(ClaimId id, std::vector<Param> params, std::int64_t claimed,
                         std::int64_t computed, Expectation expectation);
/// Real claim: match iff |computed - claimed| <= tolerance.
ClaimRecord real_record(ClaimId id, std::vector<Param> params, double claimed, double computed,
                        double tolerance, Expectation expectation);
ClaimRecord bound_record(ClaimId id, std::vector<Param> params, Value claimed, Value computed,
                         bool holds);
ClaimRecord unverifiable_record(ClaimId id, std::vector<Param> params, Value claimed);

/// Canonical order: claim id string, then params as (name, numeric value)
/// pairs.
bool record_less(const ClaimRecord& a, const ClaimRecord& b);

struct IntRange {
  int lo;
  int hi;  // inclusive
};

enum class Suite { Grid, Table1, Closed, Bounds, Lemma2, Bell, Hy1 };

std::string_view to_string(Suite s);

/// Accepts "all", "claims" (everything except bounds) or a comma-separated
/// list of suite names.
std::vector<Suite> parse_suites(std::string_view text);

inline constexpr int kCaterpillarVertexCap = 200;
inline constexpr int kSuiteTreeCap = 8;
inline constexpr int kExtremalTreeCap = 9;
inline constexpr int kSuiteGraphCap = 6;
inline constexpr int kHy1MaxLength = 8;

struct VerifyConfig {
  std::vector<Suite> suites{Suite::Grid,   Suite::Table1, Suite::Closed, Suite::Bounds,
                            Suite::Lemma2, Suite::Bell,   Suite::Hy1};
  IntRange grid_n{1, 12};
  IntRange grid_m{1, 12};
  int spine_max_length = 5;
  int spine_max_degree = 6;
  int sequence_max_degree = 7;
  int max_tree_n = 8;
  int max_graph_n = 6;
  IntRange lemma2_n{2, 8};
  IntRange bell_n{2, 6};
  int hy1_max_length = 5;
  int hy1_max_degree = 6;
  PowerIterationOptions power{};
};

/// Throws PreconditionError naming the first cap exceeded.
void validate(const VerifyConfig& config);

// -- Caterpillar grid and Table 1 ---------------------------------------------

std::vector<ClaimRecord> check_caterpillar_grid(IntRange n_range, IntRange m_range);

struct Table1Row {
  int n;
  int m;
  std::int64_t irr;
  std::int64_t sigma;
  std::int64_t sigma_minus_irr;
  std::int64_t max_of_both;
  std::int64_t irr_direct;  // audit
  std::int64_t sigma_direct;

  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

struct Table1 {
  std::vector<Table1Row> rows;
  bool exact;  // every printed column reproduced
};

/// The 40 rows as printed (audit columns zero), sorted by (n, m).
const std::vector<Table1Row>& published_table1();

Table1 reproduce_table1();
std::vector<ClaimRecord> table1_records(const Table1& table);

// -- Closed-form cross checks -------------------------------------------------

std::vector<ClaimRecord> check_star_irr(IntRange n_range);
std::vector<ClaimRecord> check_double_star_sigma(IntRange r_range, IntRange k_range);
std::vector<ClaimRecord> check_complete_bipartite_sigma(IntRange m_range, IntRange n_range);
std::vector<ClaimRecord> check_spine_irr(int max_length, int max_degree);
std::vector<ClaimRecord> check_caterpillar_nn(IntRange n_range);
std::vector<ClaimRecord> check_max_edges(int max_n);
std::vector<ClaimRecord> check_sigma_spine3(int max_degree);
std::vector<ClaimRecord> check_sigma_seq4(int max_degree);
std::vector<ClaimRecord> check_seq4_irr(int max_degree);
/// The four sigma values quoted for the (10,8,3,2) example; no formula
/// produces them, so they are carried as unverifiable constants.
std::vector<ClaimRecord> sequence_example_constants();
std::vector<ClaimRecord> check_closed_forms(const VerifyConfig& config);

/// Direct irr / sigma of the caterpillar realizing each realizable
/// arrangement of `degrees`; the extremes over all of them.
struct ArrangementExtremes {
  std::int64_t max_value;
  std::int64_t min_value;
  std::vector<int> argmax;
  std::vector<int> argmin;
  std::size_t realizable;
};
enum class SpineIndex { Irr, Sigma };
std::optional<ArrangementExtremes> arrangement_extremes(std::vector<int> degrees, SpineIndex index);

// -- Bounds over exhaustive enumeration ---------------------------------------

std::vector<ClaimRecord> check_bounds_suite(int max_tree_n, int max_graph_n);

// -- Extremal trees -----------------------------------------------------------

struct ExtremalTrees {
  int n;
  std::uint64_t tree_count;
  std::int64_t max_irr;
  std::int64_t min_irr;
  std::int64_t max_sigma;
  std::int64_t min_sigma;
  /// Distinct descending degree sequences attaining each extremum.
  std::vector<DegreeSequence> argmax_irr;
  std::vector<DegreeSequence> argmin_irr;
  std::vector<DegreeSequence> argmax_sigma;
  std::vector<DegreeSequence> argmin_sigma;
};

ExtremalTrees extremal_trees(int n);

std::vector<ClaimRecord> check_lemma2(IntRange n_range);

// -- Spectral maximum ---------------------------------------------------------

struct BellSearch {
  int n;
  double max_value;
  std::uint64_t representative_mask;  // most edges, then lowest mask
  std::size_t maximizer_count;
};

BellSearch bell_search(int n, const PowerIterationOptions& power = {});
std::vector<ClaimRecord> check_bell(IntRange n_range, const PowerIterationOptions& power = {});

// -- Spine ordering hypothesis ------------------------------------------------

/// Largest value at the last position, second largest at the first, the
/// smallest at position k-1, second smallest at position 2, remaining values
/// descending from position 3 inward.
std::vector<int> hy1_arrangement(std::vector<int> degrees);

ClaimRecord check_hy1(const std::vector<int>& degrees);
std::vector<ClaimRecord> check_hy1_grid(int max_length, int max_degree);

// -- Whole run ----------------------------------------------------------------

struct Report {
  VerifyConfig config;
  std::vector<ClaimRecord> records;
  std::optional<bool> table1_exact;
};

struct StatusCounts {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t bound_holds = 0;
  std::size_t bound_violated = 0;
  std::size_t unverifiable = 0;
  std::size_t unexpected = 0;  // expected-match records that mismatched
};

StatusCounts summarize(const Report& report);

/// True iff a bound is violated or an expected match did not match.
bool strict_failure(const Report& report);

Report run_all(const VerifyConfig& config);

}  // namespace irrlab::verify
