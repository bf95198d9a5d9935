#include "irrlab/serialize.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "irrlab/error.hpp"

namespace irrlab {
namespace {

using nlohmann::ordered_json;
using verify::Value;

std::string value_text(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return format_real(*d);
  return {};
}

ordered_json real_json(double x) { return std::stod(format_real(x)); }

ordered_json value_json(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) return real_json(*d);
  return nullptr;
}

std::string params_text(const std::vector<verify::Param>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ';';
    out += params[i].name + "=" + std::to_string(params[i].value);
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

/// Left-aligned fixed-width table.
std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

ordered_json config_json(const verify::VerifyConfig& c) {
  ordered_json suites = ordered_json::array();
  for (auto s : c.suites) suites.push_back(std::string(verify::to_string(s)));
  auto range = [](verify::IntRange r) { return ordered_json::array({r.lo, r.hi}); };
  return ordered_json{{"suites", suites},
                      {"grid_n", range(c.grid_n)},
                      {"grid_m", range(c.grid_m)},
                      {"spine_max_length", c.spine_max_length},
                      {"spine_max_degree", c.spine_max_degree},
                      {"sequence_max_degree", c.sequence_max_degree},
                      {"max_tree_n", c.max_tree_n},
                      {"max_graph_n", c.max_graph_n},
                      {"lemma2_n", range(c.lemma2_n)},
                      {"bell_n", range(c.bell_n)},
                      {"hy1_max_length", c.hy1_max_length},
                      {"hy1_max_degree", c.hy1_max_degree},
                      {"power_tolerance", real_json(c.power.tolerance)},
                      {"power_max_iterations", c.power.max_iterations}};
}

std::string joined(const std::vector<DegreeSequence>& seqs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (i) out += sep;
    out += seqs[i].to_string();
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw PreconditionError("unknown format '" + std::string(name) + "' (text, csv, json)");
}

std::string format_real(double value) {
  if (value == 0.0) return "0";  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string serialize(const IndexBundle& b, Format format) {
  const std::vector<std::pair<std::string, std::string>> fields{
      {"irr", std::to_string(b.irr)},
      {"sigma", std::to_string(b.sigma)},
      {"m1", std::to_string(b.m1)},
      {"m2", std::to_string(b.m2)},
      {"irr_total", std::to_string(b.irr_total)},
      {"sigma_total", std::to_string(b.sigma_total)},
      {"szekeres_wilf", std::to_string(b.szekeres_wilf)},
      {"spectral_radius", format_real(b.spectral_radius)},
      {"cs_irregularity", format_real(b.cs_irregularity)},
  };
  switch (format) {
    case Format::Csv: {
      std::string header, row;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        header += (i ? "," : "") + fields[i].first;
        row += (i ? "," : "") + fields[i].second;
      }
      return header + "\n" + row + "\n";
    }
    case Format::Json:
      return dump(ordered_json{{"irr", b.irr},
                               {"sigma", b.sigma},
                               {"m1", b.m1},
                               {"m2", b.m2},
                               {"irr_total", b.irr_total},
                               {"sigma_total", b.sigma_total},
                               {"szekeres_wilf", b.szekeres_wilf},
                               {"spectral_radius", real_json(b.spectral_radius)},
                               {"cs_irregularity", real_json(b.cs_irregularity)}});
    case Format::Text: {
      std::ostringstream os;
      for (const auto& [name, value] : fields) {
        os << std::left << std::setw(17) << name << value << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string serialize(const verify::Table1& table, Format format) {
  const std::vector<std::string> header{"n",           "m",          "irr",
                                        "sigma",       "sigma_minus_irr", "max_of_both",
                                        "irr_direct",  "sigma_direct"};
  auto cells = [](const verify::Table1Row& r) {
    return std::vector<std::string>{std::to_string(r.n),
                                    std::to_string(r.m),
                                    std::to_string(r.irr),
                                    std::to_string(r.sigma),
                                    std::to_string(r.sigma_minus_irr),
                                    std::to_string(r.max_of_both),
                                    std::to_string(r.irr_direct),
                                    std::to_string(r.sigma_direct)};
  };
  switch (format) {
    case Format::Csv: {
      std::ostringstream os;
      for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
      os << '\n';
      for (const auto& r : table.rows) {
        const auto c = cells(r);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << '\n';
      }
      return os.str();
    }
    case Format::Json: {
      ordered_json rows = ordered_json::array();
      for (const auto& r : table.rows) {
        rows.push_back(ordered_json{{"n", r.n},
                                    {"m", r.m},
                                    {"irr", r.irr},
                                    {"sigma", r.sigma},
                                    {"sigma_minus_irr", r.sigma_minus_irr},
                                    {"max_of_both", r.max_of_both},
                                    {"irr_direct", r.irr_direct},
                                    {"sigma_direct", r.sigma_direct}});
      }
      return dump(ordered_json{{"table1_exact", table.exact}, {"rows", rows}});
    }
    case Format::Text: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : table.rows) rows.push_back(cells(r));
      return text_table(header, rows) +
             "table1_exact: " + (table.exact ? "yes" : "no") + "\n";
    }
  }
  return {};
}

std::string serialize(const verify::Report& report, Format format) {
  const auto counts = verify::summarize(report);
  switch (format) {
    case Format::Csv: {
      std::ostringstream os;
      os << "claim,params,claimed,computed,delta,status\n";
      for (const auto& r : report.records) {
        os << claims::to_string(r.claim) << ',' << params_text(r.params) << ','
           << value_text(r.claimed) << ',' << value_text(r.computed) << ','
           << value_text(r.delta()) << ',' << verify::to_string(r.status) << '\n';
      }
      return os.str();
    }
    case Format::Json: {
      ordered_json records = ordered_json::array();
      for (const auto& r : report.records) {
        ordered_json params = ordered_json::object();
        for (const auto& p : r.params) params[p.name] = p.value;
        records.push_back(ordered_json{{"claim", std::string(claims::to_string(r.claim))},
                                       {"params", params},
                                       {"claimed", value_json(r.claimed)},
                                       {"computed", value_json(r.computed)},
                                       {"delta", value_json(r.delta())},
                                       {"status", std::string(verify::to_string(r.status))}});
      }
      ordered_json summary{{"records", report.records.size()},
                           {"match", counts.match},
                           {"mismatch", counts.mismatch},
                           {"bound_holds", counts.bound_holds},
                           {"bound_violated", counts.bound_violated},
                           {"unverifiable", counts.unverifiable},
                           {"unexpected_mismatch", counts.unexpected}};
      summary["table1_exact"] =
          report.table1_exact ? ordered_json(*report.table1_exact) : ordered_json(nullptr);
      return dump(ordered_json{{"provenance",
                                {{"tool", kToolName},
                                 {"version", kToolVersion},
                                 {"config", config_json(report.config)}}},
                               {"summary", summary},
                               {"records", records}});
    }
    case Format::Text: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : report.records) {
        rows.push_back({std::string(claims::to_string(r.claim)), params_text(r.params),
                        value_text(r.claimed), value_text(r.computed), value_text(r.delta()),
                        std::string(verify::to_string(r.status))});
      }
      std::ostringstream os;
      os << text_table({"claim", "params", "claimed", "computed", "delta", "status"}, rows);
      os << "\nrecords " << report.records.size() << ": match " << counts.match << ", mismatch "
         << counts.mismatch << ", bound_holds " << counts.bound_holds << ", bound_violated "
         << counts.bound_violated << ", unverifiable " << counts.unverifiable
         << ", unexpected_mismatch " << counts.unexpected << '\n';
      if (report.table1_exact) {
        os << "table1_exact: " << (*report.table1_exact ? "yes" : "no") << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string serialize(const verify::ExtremalTrees& ext, ExtremalIndex index, Format format) {
  struct Row {
    std::string name;
    std::int64_t max;
    const std::vector<DegreeSequence>* argmax;
    std::int64_t min;
    const std::vector<DegreeSequence>* argmin;
  };
  std::vector<Row> rows;
  if (index != ExtremalIndex::Sigma) {
    rows.push_back({"irr", ext.max_irr, &ext.argmax_irr, ext.min_irr, &ext.argmin_irr});
  }
  if (index != ExtremalIndex::Irr) {
    rows.push_back({"sigma", ext.max_sigma, &ext.argmax_sigma, ext.min_sigma, &ext.argmin_sigma});
  }
  switch (format) {
    case Format::Csv: {
      std::ostringstream os;
      os << "n,trees,index,max,max_witnesses,min,min_witnesses\n";
      for (const auto& r : rows) {
        os << ext.n << ',' << ext.tree_count << ',' << r.name << ',' << r.max << ",\""
           << joined(*r.argmax, " ") << "\"," << r.min << ",\"" << joined(*r.argmin, " ")
           << "\"\n";
      }
      return os.str();
    }
    case Format::Json: {
      ordered_json j{{"n", ext.n}, {"trees", ext.tree_count}};
      for (const auto& r : rows) {
        auto seqs = [](const std::vector<DegreeSequence>& v) {
          ordered_json a = ordered_json::array();
          for (const auto& s : v) a.push_back(s.values);
          return a;
        };
        j[r.name] = ordered_json{{"max", r.max},
                                 {"max_witnesses", seqs(*r.argmax)},
                                 {"min", r.min},
                                 {"min_witnesses", seqs(*r.argmin)}};
      }
      return dump(j);
    }
    case Format::Text: {
      std::ostringstream os;
      os << "labeled trees of order " << ext.n << ": " << ext.tree_count << '\n';
      for (const auto& r : rows) {
        os << r.name << " max " << r.max << " witness " << joined(*r.argmax, " ") << '\n';
        os << r.name << " min " << r.min << " witness " << joined(*r.argmin, " ") << '\n';
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace irrlab
