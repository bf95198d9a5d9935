// irrlab: generate graphs, compute irregularity indices, reproduce the
// caterpillar comparison table and run the claim verification suites.
//
// Exit codes: 0 ok, 1 strict verification failure, 2 usage or precondition,
// 3 numerical failure.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irrlab/edge_list.hpp"
#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/indices.hpp"
#include "irrlab/serialize.hpp"
#include "irrlab/verify.hpp"

namespace {

using namespace irrlab;

constexpr int kExitOk = 0;
constexpr int kExitStrict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct FamilyArgs {
  std::string family;
  std::optional<int> n, m, r, k;
  std::string spine;
};

struct OutputArgs {
  std::string format;
  std::string out;

  Format resolve() const {
    if (!format.empty()) return parse_format(format);
    if (!out.empty()) return Format::Csv;
    return isatty(fileno(stdout)) ? Format::Text : Format::Csv;
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family,
                  "path | star | double-star | complete-bipartite | caterpillar | spine-caterpillar");
  cmd->add_option("--n", a.n, "order, spine length, or second part size");
  cmd->add_option("--m", a.m, "leaves per spine vertex, or first part size");
  cmd->add_option("--r", a.r, "double star: degree of the second centre");
  cmd->add_option("--k", a.k, "double star: degree of the first centre");
  cmd->add_option("--spine", a.spine, "spine degrees, comma separated (e.g. 4,5,4)");
}

void add_output_options(CLI::App* cmd, OutputArgs& o) {
  cmd->add_option("--format", o.format, "text | csv | json");
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

int need(const std::optional<int>& v, const char* flag, const std::string& family) {
  if (!v) throw PreconditionError("family '" + family + "' requires " + flag);
  return *v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

Graph build_family(const FamilyArgs& a) {
  const auto& f = a.family;
  if (f == "path") return path(need(a.n, "--n", f));
  if (f == "star") return star(need(a.n, "--n", f));
  if (f == "double-star") return double_star(need(a.r, "--r", f), need(a.k, "--k", f));
  if (f == "complete-bipartite") {
    return complete_bipartite(need(a.m, "--m", f), need(a.n, "--n", f));
  }
  if (f == "caterpillar") return caterpillar_uniform({need(a.n, "--n", f), need(a.m, "--m", f)});
  if (f == "spine-caterpillar") {
    if (a.spine.empty()) throw PreconditionError("family 'spine-caterpillar' requires --spine");
    return caterpillar_from_spine(SpineSequence{parse_int_list(a.spine)});
  }
  throw PreconditionError("unknown family '" + f + "'");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw PreconditionError("cannot open '" + out + "' for writing");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irrlab: graph irregularity index laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  FamilyArgs gen_family;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  add_family_options(gen, gen_family);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  FamilyArgs idx_family;
  std::string idx_input;
  OutputArgs idx_output;
  PowerIterationOptions idx_power;
  auto* indices = app.add_subcommand("indices", "compute every index for one graph");
  indices->add_option("--input", idx_input, "edge-list file");
  add_family_options(indices, idx_family);
  add_output_options(indices, idx_output);
  indices->add_option("--power-tolerance", idx_power.tolerance,
                      "stop when successive eigenvalue estimates differ by less");
  indices->add_option("--max-iterations", idx_power.max_iterations, "power iteration cap");

  OutputArgs table_output;
  auto* table1 = app.add_subcommand("table1", "reproduce the caterpillar comparison table");
  add_output_options(table1, table_output);

  verify::VerifyConfig config;
  std::string suite = "all";
  bool strict = false;
  OutputArgs verify_output;
  auto* verify_cmd = app.add_subcommand("verify", "run claim verification suites");
  verify_cmd->add_option("--suite", suite,
                         "all | claims | comma list of grid,table1,closed,bounds,lemma2,bell,hy1");
  verify_cmd->add_option("--max-tree-n", config.max_tree_n, "largest tree order for bounds");
  verify_cmd->add_option("--max-graph-n", config.max_graph_n, "largest graph order for bounds");
  verify_cmd->add_option("--spine-max-length", config.spine_max_length, "longest spine in the irr spine grid");
  verify_cmd->add_option("--spine-max-degree", config.spine_max_degree, "largest spine degree in that grid");
  verify_cmd->add_option("--lemma2-max-n", config.lemma2_n.hi, "largest tree order for the tree extremes");
  verify_cmd->add_option("--power-tolerance", config.power.tolerance, "eigenvalue convergence tolerance");
  verify_cmd->add_option("--max-iterations", config.power.max_iterations, "power iteration cap");
  verify_cmd->add_flag("--strict", strict, "exit 1 on violated bounds or unexpected mismatches");
  add_output_options(verify_cmd, verify_output);

  int ext_n = 0;
  std::string ext_index = "both";
  OutputArgs ext_output;
  auto* extremal = app.add_subcommand("extremal", "extreme irr/sigma over all labeled trees");
  extremal->add_option("--n", ext_n, "tree order (2..9)")->required();
  extremal->add_option("--index", ext_index, "irr | sigma | both");
  add_output_options(extremal, ext_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      emit(format_edge_list(build_family(gen_family)), gen_out);
    } else if (*indices) {
      Graph g;
      if (!idx_input.empty()) {
        if (!idx_family.family.empty()) {
          throw PreconditionError("use either --input or --family, not both");
        }
        std::ifstream in(idx_input);
        if (!in) throw PreconditionError("cannot open '" + idx_input + "'");
        g = read_edge_list(in);
      } else if (!idx_family.family.empty()) {
        g = build_family(idx_family);
      } else {
        throw PreconditionError("indices needs --input or --family");
      }
      if (g.order() == 0) throw PreconditionError("graph has no vertices");
      if (idx_power.tolerance <= 0.0 || idx_power.max_iterations < 1) {
        throw PreconditionError("power iteration needs a positive tolerance and iteration cap");
      }
      emit(serialize(compute_indices(g, idx_power), idx_output.resolve()), idx_output.out);
    } else if (*table1) {
      emit(serialize(verify::reproduce_table1(), table_output.resolve()), table_output.out);
    } else if (*verify_cmd) {
      config.suites = verify::parse_suites(suite);
      const auto report = verify::run_all(config);
      emit(serialize(report, verify_output.resolve()), verify_output.out);
      if (strict && verify::strict_failure(report)) return kExitStrict;
    } else if (*extremal) {
      ExtremalIndex which = ExtremalIndex::Both;
      if (ext_index == "irr") {
        which = ExtremalIndex::Irr;
      } else if (ext_index == "sigma") {
        which = ExtremalIndex::Sigma;
      } else if (ext_index != "both") {
        throw PreconditionError("unknown index '" + ext_index + "' (irr, sigma, both)");
      }
      emit(serialize(verify::extremal_trees(ext_n), which, ext_output.resolve()), ext_output.out);
    }
  } catch (const ParseError& e) {
    std::cerr << "irrlab: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "irrlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "irrlab: numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}
