// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runtime limits are part of each criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "irrlab/closed_forms.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/indices.hpp"
#include "irrlab/verify.hpp"

using namespace irrlab;
namespace v = irrlab::verify;
namespace c = irrlab::claims;

namespace {

// First six columns of every row as printed in the published table.
constexpr const char* kTable1Fixture =
    "n,m,irr,sigma,sigma_minus_irr,max_of_both\n"
    "3,3,32,55,23,55\n"
    "3,6,116,436,320,436\n"
    "3,7,156,691,535,691\n"
    "3,9,254,1465,1211,1465\n"
    "4,3,44,55,11,55\n"
    "4,4,74,130,56,130\n"
    "4,7,212,691,479,691\n"
    "4,9,344,1465,1121,1465\n"
    "4,10,422,2008,1586,2008\n"
    "5,3,56,55,-1,56\n"
    "5,6,200,436,236,436\n"
    "5,7,268,691,423,691\n"
    "5,9,434,1465,1031,1465\n"
    "6,3,68,55,-13,68\n"
    "6,4,114,130,16,130\n"
    "6,7,324,691,367,691\n"
    "6,9,524,1465,941,1465\n"
    "6,10,642,2008,1366,2008\n"
    "7,3,80,55,-25,80\n"
    "7,5,202,253,51,253\n"
    "7,7,380,691,311,691\n"
    "7,8,490,1030,540,1030\n"
    "7,9,614,1465,851,1465\n"
    "7,10,752,2008,1256,2008\n"
    "8,3,92,55,-37,92\n"
    "8,5,232,253,21,253\n"
    "8,7,436,691,255,691\n"
    "8,8,562,1030,468,1030\n"
    "8,10,862,2008,1146,2008\n"
    "9,3,104,55,-49,104\n"
    "9,5,262,253,-9,262\n"
    "9,7,492,691,199,691\n"
    "9,8,634,1030,396,1030\n"
    "9,9,794,1465,671,1465\n"
    "9,10,972,2008,1036,2008\n"
    "10,3,116,55,-61,116\n"
    "10,5,292,253,-39,292\n"
    "10,7,548,691,143,691\n"
    "10,8,706,1030,324,1030\n"
    "10,10,1082,2008,926,2008\n";

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string str(std::int64_t x) { return std::to_string(x); }

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(IRRLAB_CLI_PATH) + " " + args;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw Failure{"cannot start " + cmd};
  std::string out;
  char buf[4096];
  while (const auto n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_columns(const std::string& csv, int count) {
  std::istringstream in(csv);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    int commas = 0;
    std::size_t cut = line.size();
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == ',' && ++commas == count) {
        cut = i;
        break;
      }
    }
    out += line.substr(0, cut) + "\n";
  }
  return out;
}

std::vector<const v::ClaimRecord*> of(const v::Report& r, v::ClaimId id) {
  std::vector<const v::ClaimRecord*> out;
  for (const auto& rec : r.records)
    if (rec.claim == id) out.push_back(&rec);
  return out;
}

void all_match(const std::vector<v::ClaimRecord>& recs, const std::string& label) {
  expect(!recs.empty(), label + ": no records");
  for (const auto& r : recs) expect(r.status == v::Status::Match, label + ": a record did not match");
}

void check_parity(const Graph& g, const std::string& label) {
  const auto i = albertson_irr(g), s = sigma(g);
  expect(s >= i && (s - i) % 2 == 0, label + ": sigma/irr parity");
}

void check_handshake(const Graph& g, const std::string& label) {
  expect(degree_sequence(g).sum() == 2 * static_cast<std::int64_t>(g.edge_count()),
         label + ": handshake");
}

// -- criteria -----------------------------------------------------------------

std::string ac1() {
  const auto r = cli("table1 --format csv");
  expect(r.code == 0, "table1 exit code " + str(r.code));
  expect(first_columns(r.out, 6) == kTable1Fixture, "table1 csv differs from the published table");
  expect(r.out.find("\n3,3,32,55,23,55,") != std::string::npos, "row (3,3)");
  expect(r.out.find("\n10,10,1082,2008,926,2008,") != std::string::npos, "row (10,10)");
  return "40 rows byte-exact";
}

std::string ac2() {
  int cells = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= 12; ++m) {
      expect(c::irr_caterpillar_claimed(n, m) == albertson_irr(caterpillar_uniform({n, m})),
             "irr C(" + str(n) + "," + str(m) + ")");
      ++cells;
    }
  }
  return str(cells) + " cells exact";
}

std::string ac3() {
  for (int m = 1; m <= 12; ++m)
    expect(c::sigma_caterpillar_claimed(2, m) == sigma(caterpillar_uniform({2, m})),
           "n=2 m=" + str(m) + " should match");
  for (int n = 3; n <= 12; ++n) {
    for (int m = 1; m <= 12; ++m) {
      const auto direct = sigma(caterpillar_uniform({n, m}));
      // edge by edge: 2m leaves at degree m+1, (n-2)m at m+2, two spine edges differing by 1
      const std::int64_t oracle = 2 * m * std::int64_t{m} * m + (n - 2) * std::int64_t{m} * (m + 1) * (m + 1) + 2;
      expect(direct == oracle, "direct sigma oracle at (" + str(n) + "," + str(m) + ")");
      expect(c::sigma_caterpillar_claimed(n, m) != direct,
             "n=" + str(n) + " m=" + str(m) + " should differ");
    }
  }
  expect(sigma(caterpillar_uniform({3, 3})) == 104, "direct sigma C(3,3)");
  expect(c::sigma_caterpillar_claimed(3, 3) == 55, "claimed sigma C(3,3)");

  const auto rep = v::run_all(v::VerifyConfig{});
  std::set<std::pair<std::int64_t, std::int64_t>> mism, want;
  for (int n = 3; n <= 12; ++n)
    for (int m = 1; m <= 12; ++m) want.insert({n, m});
  std::size_t matches = 0;
  for (const auto* r : of(rep, v::ClaimId::SigCat)) {
    if (r->status == v::Status::Mismatch) mism.insert({*r->param("n"), *r->param("m")});
    else if (r->status == v::Status::Match && *r->param("n") == 2) ++matches;
    else throw Failure{"unexpected SIG-CAT record"};
  }
  expect(mism == want, "SIG-CAT mismatch set");
  expect(matches == 12, "SIG-CAT n=2 matches");

  std::set<v::ClaimId> mismatching;
  for (const auto& r : rep.records)
    if (r.status == v::Status::Mismatch) mismatching.insert(r.claim);
  const std::set<v::ClaimId> expected{v::ClaimId::SigCat,    v::ClaimId::SigTreeMax,
                                      v::ClaimId::HySig3,    v::ClaimId::HySig3Max,
                                      v::ClaimId::HySig3Min, v::ClaimId::HySig4,
                                      v::ClaimId::IrrSeq4PyMax};
  expect(mismatching == expected, "report mismatch claims differ from the expected set");
  for (const auto* r : of(rep, v::ClaimId::SigTreeMax))
    expect((r->status == v::Status::Mismatch) == (*r->param("n") >= 4), "SIG-TREE-MAX set");
  expect(v::summarize(rep).unexpected == 0, "an expected match mismatched");
  return "120 mismatches at n>=3, 12 matches at n=2, sigma C(3,3) 104 vs 55";
}

std::string ac4() {
  all_match(v::check_star_irr({2, 12}), "IRR-STAR");
  all_match(v::check_double_star_sigma({1, 10}, {2, 10}), "SIG-DSTAR");
  all_match(v::check_complete_bipartite_sigma({1, 10}, {1, 10}), "SIG-KMN");
  const auto spine = v::check_spine_irr(6, 7);
  all_match(spine, "IRR-SPINE");
  all_match(v::check_caterpillar_nn({3, 12}), "IRR-CNN");
  for (int r = 1; r <= 10; ++r)
    for (int k = 2; k <= 10; ++k)
      expect(c::sigma_double_star_claimed(r, k) == sigma(double_star(r, k)), "double star");
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= 10; ++n)
      expect(c::sigma_complete_bipartite_claimed(m, n) == sigma(complete_bipartite(m, n)), "K_mn");
  return str(spine.size()) + " spine sequences plus family grids exact";
}

std::string ac5() {
  for (int n = 3; n <= 8; ++n) {
    const auto e = v::extremal_trees(n);
    const auto star_seq = degree_sequence(star(n)).sorted_descending();
    const std::int64_t a = n - 1, b = n - 2;
    expect(e.tree_count == labeled_tree_count(n), "tree count n=" + str(n));
    expect(e.max_irr == a * b, "max irr n=" + str(n));
    expect(e.argmax_irr == std::vector<DegreeSequence>{star_seq}, "irr witness n=" + str(n));
    expect(e.max_sigma == a * b * b, "max sigma n=" + str(n));
    expect(e.argmax_sigma == std::vector<DegreeSequence>{star_seq}, "sigma witness n=" + str(n));
  }
  for (const auto& r : v::check_lemma2({3, 8})) {
    if (r.claim != v::ClaimId::SigTreeMax) continue;
    const auto n = *r.param("n");
    expect((r.status == v::Status::Match) == (n == 3), "SIG-TREE-MAX status n=" + str(n));
    expect(std::get<std::int64_t>(r.computed) == (n - 1) * (n - 2) * (n - 2), "enumerated max");
  }
  return "n=3..8, star witnesses, sigma claim holds only at n=3";
}

std::string ac6() {
  const auto recs = v::check_bounds_suite(8, 6);
  std::set<v::ClaimId> kinds;
  for (const auto& r : recs) {
    expect(r.status == v::Status::BoundHolds, "suite reported a violation");
    kinds.insert(r.claim);
  }
  expect(kinds == std::set<v::ClaimId>{v::ClaimId::Lem3Bound, v::ClaimId::SigtBound,
                                       v::ClaimId::IrrtGhal},
         "bound kinds");

  // second pass computed here, graph by graph
  std::size_t graphs = 0;
  auto bounds = [&](const Graph& g, bool tree) {
    const auto n = static_cast<std::int64_t>(g.order());
    const auto irr = albertson_irr(g);
    expect(static_cast<double>(irr) <= albertson_upper_bound(g) + 1e-9, "albertson bound");
    if (n >= 3) expect(total_sigma(g) <= sigma_t_upper_bound(n), "total sigma bound");
    if (tree) {
      const auto irr_t = total_irregularity(g);
      expect(irr_t <= (n - 2) * irr, "linear total irregularity bound");
      expect(4 * irr_t <= n * n * irr, "quadratic total irregularity bound");
    }
    ++graphs;
  };
  for (int n = 2; n <= 8; ++n) for_each_labeled_tree(n, [&](const Graph& t) { bounds(t, true); });
  for (int n = 2; n <= 6; ++n)
    for_each_graph(n, true, [&](std::uint64_t, const Graph& g) { bounds(g, false); });

  expect(std::abs(albertson_upper_bound(path(3)) - 2.0) < 1e-12 && albertson_irr(path(3)) == 2,
         "equality at P3");
  expect(total_sigma(star(4)) == 12 && sigma_t_upper_bound(4) == 12, "equality at star(4)");
  return str(graphs) + " graphs, equality at P3 and star(4)";
}

std::string ac7() {
  std::ostringstream note;
  for (int n = 4; n <= 6; ++n) {
    const auto b = v::bell_search(n);
    expect(std::abs(b.max_value - bell_max_cs(n)) <= 1e-6, "n=" + str(n));
    note << " n=" << n << ":" << b.max_value;
  }
  const auto b4 = v::bell_search(4);
  const auto g = graph_from_mask(4, b4.representative_mask);
  std::size_t triangle_edges = 0;
  Vertex isolated = -1;
  for (Vertex x = 0; x < 4; ++x)
    if (degree(g, x) == 0) isolated = x;
  for (const auto& e : g.edges()) triangle_edges += (e.u != isolated && e.v != isolated);
  expect(isolated >= 0 && g.edge_count() == 3 && triangle_edges == 3, "n=4 maximizer is not K3+K1");
  expect(std::abs(b4.max_value - 0.5) <= 1e-9, "n=4 value");
  return "within 1e-6;" + note.str();
}

std::string ac8() {
  expect(c::irr_seq4_py_max(10, 8, 3, 2) == 146, "(10,8,3,2) max");
  expect(c::irr_seq4_py_min(10, 8, 3, 2) == 134, "(10,8,3,2) min");
  expect(c::irr_seq4_py_max(8, 5, 3, 2) == 76, "(8,5,3,2) max");
  expect(c::irr_seq4_py_min(8, 5, 3, 2) == 70, "(8,5,3,2) min");
  return "146/134 and 76/70";
}

std::string ac9() {
  std::size_t touched = 0;
  auto graph_props = [&](const Graph& g, const std::string& label, bool spectral) {
    check_handshake(g, label);
    check_parity(g, label);
    if (spectral) {
      const double mean = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.order());
      expect(spectral_radius(g) >= mean - 1e-9, label + ": spectral radius below mean degree");
    }
    ++touched;
  };
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, false, [&](std::uint64_t, const Graph& g) { graph_props(g, "graph", true); });
  for (int n = 1; n <= 8; ++n)
    for_each_labeled_tree(n, [&](const Graph& t) { graph_props(t, "tree", true); });
  for (int n = 1; n <= 12; ++n) {
    graph_props(path(n), "path", true);
    if (n >= 2) graph_props(star(n), "star", true);
    for (int m = 1; m <= 12; ++m) graph_props(caterpillar_uniform({n, m}), "caterpillar", true);
  }
  for (int r = 1; r <= 10; ++r)
    for (int k = 2; k <= 10; ++k) graph_props(double_star(r, k), "double star", true);
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= 10; ++n) graph_props(complete_bipartite(m, n), "K_mn", true);

  std::size_t codes = 0;
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> code(n - 2, 0);
    while (true) {
      expect(prufer_roundtrip(code) == code, "prufer code round trip");
      expect(prufer_decode(prufer_encode(prufer_decode(code))) == prufer_decode(code),
             "prufer tree round trip");
      ++codes;
      int i = n - 3;
      while (i >= 0 && code[i] == n - 1) code[i--] = 0;
      if (i < 0) break;
      ++code[i];
    }
  }
  return str(touched) + " graphs, " + str(codes) + " codes";
}

std::string ac10() {
  const auto dir = std::filesystem::temp_directory_path() / ("irrlab_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string note;
  for (const char* fmt : {"csv", "json"}) {
    std::string runs[2];
    for (int i = 0; i < 2; ++i) {
      const auto out = dir / ("run" + std::to_string(i) + "." + fmt);
      const auto r = cli(std::string("verify --suite all --format ") + fmt + " --out " + out.string());
      expect(r.code == 0, "verify exit code " + str(r.code));
      runs[i] = slurp(out);
    }
    expect(!runs[0].empty() && runs[0] == runs[1], std::string(fmt) + " reports differ");
    note += std::string(fmt) + " " + str(static_cast<std::int64_t>(runs[0].size())) + " bytes ";
  }
  std::filesystem::remove_all(dir);
  return note + "identical";
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no limit
  std::function<std::string()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table 1 reproduction", 1.0, ac1},
      {2, "caterpillar irr formula exact", 1.0, ac2},
      {3, "caterpillar sigma discrepancy", 0.0, ac3},
      {4, "exact closed forms", 30.0, ac4},
      {5, "extremal tree enumeration", 60.0, ac5},
      {6, "bounds never violated", 60.0, ac6},
      {7, "spectral irregularity maximum", 60.0, ac7},
      {8, "four-degree sequence formulas", 0.0, ac8},
      {9, "property suites", 0.0, ac9},
      {10, "determinism and full-suite runtime", 120.0, ac10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = cr.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      ok = false;
      detail += " (over time limit)";
    }
    char timing[64];
    if (cr.limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, cr.limit_seconds);
    else std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " AC" << cr.id << " " << cr.title << " [" << timing
              << "] " << detail << "\n";
    failed += !ok;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (criteria.size() - failed) << "/"
            << criteria.size() << "\n";
  return failed ? 1 : 0;
}
