#include "irrlab/edge_list.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "irrlab/error.hpp"

namespace irrlab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_id(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 0 ||
      value > std::numeric_limits<Vertex>::max()) {
    throw ParseError(line, "expected a non-negative vertex id, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::optional<std::size_t> declared_n;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (tokens.front() == "p") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'p <n>'");
      if (declared_n) throw ParseError(line_no, "duplicate 'p' header");
      if (!pairs.empty()) throw ParseError(line_no, "'p' header must precede edges");
      declared_n = static_cast<std::size_t>(parse_id(tokens[1], line_no));
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex ids per edge line");
    const auto u = static_cast<Vertex>(parse_id(tokens[0], line_no));
    const auto v = static_cast<Vertex>(parse_id(tokens[1], line_no));
    if (u == v) throw ParseError(line_no, "self-loop " + std::to_string(u) + " " + std::to_string(v));
    if (declared_n && (static_cast<std::size_t>(u) >= *declared_n ||
                       static_cast<std::size_t>(v) >= *declared_n)) {
      throw ParseError(line_no, "vertex id exceeds declared count " + std::to_string(*declared_n));
    }
    pairs.emplace_back(u, v);
  }
  return Graph::from_pairs(pairs, declared_n);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace irrlab
