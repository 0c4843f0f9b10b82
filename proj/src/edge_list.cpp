#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "sslab/error.hpp"
#include "sslab/graph.hpp"

namespace sslab {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Splits a data line into whitespace-separated tokens.
std::vector<std::string_view> tokens(std::string_view s) {
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

}  // namespace

Graph read_edge_list(std::string_view text) {
  std::optional<std::uint64_t> declared_n;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::uint64_t max_index = 0;
  bool any_edge = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.substr(0, 2) == "n=") {
        std::uint64_t n = 0;
        if (!parse_u64(trim(body.substr(2)), n)) {
          throw ParseError(line_no, "malformed header '" + std::string(line) + "'");
        }
        if (declared_n) throw ParseError(line_no, "repeated n= header");
        if (any_edge) throw ParseError(line_no, "n= header after edge lines");
        declared_n = n;
      }
      continue;
    }
    auto tok = tokens(line);
    std::uint64_t a = 0, b = 0;
    if (tok.size() != 2 || !parse_u64(tok[0], a) || !parse_u64(tok[1], b)) {
      throw ParseError(line_no, "expected '<u> <v>', got '" + std::string(line) + "'");
    }
    if (a > UINT32_MAX || b > UINT32_MAX) {
      throw ParseError(line_no, "vertex index too large");
    }
    if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
    if (declared_n && (a >= *declared_n || b >= *declared_n)) {
      throw ParseError(line_no, "vertex index >= n=" + std::to_string(*declared_n));
    }
    const auto u = static_cast<Vertex>(a);
    const auto v = static_cast<Vertex>(b);
    const std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(key.first) +
                                    "," + std::to_string(key.second) + "}");
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    max_index = std::max({max_index, a, b});
    any_edge = true;
  }
  const std::uint64_t n = declared_n ? *declared_n : (any_edge ? max_index + 1 : 0);
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::string out = "# n=" + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidParameter, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_edge_list(buf.str());
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kInvalidParameter, "cannot write '" + path + "'");
  out << write_edge_list(g);
  if (!out) throw Error(Errc::kInvalidParameter, "write failed for '" + path + "'");
}

}  // namespace sslab
