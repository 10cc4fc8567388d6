#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rnalab/graph.hpp"

namespace rnalab {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_id(std::string_view tok, std::size_t line) {
  if (tok.empty() || tok.size() > 9) throw ParseError(line, "bad vertex id '" + std::string(tok) + "'");
  std::size_t value = 0;
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(line, "bad vertex id '" + std::string(tok) + "'");
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

}  // namespace detail

// Edge-list text: optional `p <order>` header, then one `u v` per line; `#` lines are comments.
inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<std::pair<std::size_t, std::size_t>> raw;
  std::vector<std::size_t> raw_line;
  bool seen_content = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto tokens = detail::split_ws(line);
    if (tokens.size() == 2 && tokens[0] == "p") {
      if (seen_content) throw ParseError(line_no, "order header must come before any edge");
      order = detail::parse_id(tokens[1], line_no);
      if (*order == 0) throw ParseError(line_no, "order must be at least 1");
      seen_content = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v', got '" + std::string(line) + "'");
    seen_content = true;
    raw.emplace_back(detail::parse_id(tokens[0], line_no), detail::parse_id(tokens[1], line_no));
    raw_line.push_back(line_no);
  }
  if (!order) {
    if (raw.empty()) throw ParseError(std::max<std::size_t>(line_no, 1), "no edges and no order header");
    std::size_t max_id = 0;
    for (auto [a, b] : raw) max_id = std::max({max_id, a, b});
    order = max_id + 1;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [a, b] = raw[i];
    if (a >= *order || b >= *order)
      throw ParseError(raw_line[i], "vertex id exceeds declared order " + std::to_string(*order));
    if (a == b) throw ParseError(raw_line[i], "self-loop at vertex " + std::to_string(a));
    edges.push_back(Edge::make(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    auto at = std::find(edges.begin(), edges.end(), *dup);
    at = std::find(at + 1, edges.end(), *dup);
    throw ParseError(raw_line[static_cast<std::size_t>(at - edges.begin())], "duplicate edge " + to_string(*dup));
  }
  return Graph(*order, std::move(edges));
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = "p " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// graph6: N(n) followed by the upper triangle, column by column, six bits per byte.
inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text, std::size_t line = 1) {
  std::string_view s = detail::trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  for (char ch : s)
    if (ch < 63 || ch > 126) throw ParseError(line, "graph6 byte out of range");
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    std::size_t value = 0;
    for (std::size_t k = 0; k < count; ++k) {
      if (pos >= s.size()) throw ParseError(line, "graph6 header truncated");
      value = (value << 6) | static_cast<std::size_t>(s[pos++] - 63);
    }
    return value;
  };
  if (s.empty()) throw ParseError(line, "empty graph6 string");
  std::size_t n;
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n == 0) throw ParseError(line, "graph6 order must be at least 1");
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t need = (pairs + 5) / 6;
  if (s.size() - pos != need)
    throw ParseError(line, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                               std::to_string(need));
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back(Edge{i, j});
    }
  }
  for (; bit < need * 6; ++bit)
    if (((s[pos + bit / 6] - 63) >> (5 - bit % 6)) & 1) throw ParseError(line, "graph6 padding bits must be zero");
  return Graph(n, std::move(edges));
}

// A single-token first content line is taken as graph6; anything else as an edge list.
inline bool looks_like_graph6(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with(">>graph6<<")) return true;
    return detail::split_ws(line).size() == 1;
  }
  return false;
}

inline Graph parse_graph(std::string_view text) {
  if (!looks_like_graph6(text)) return parse_edge_list(text);
  std::size_t pos = 0;
  std::size_t line_no = 0;
  std::optional<Graph> found;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (found) throw ParseError(line_no, "expected a single graph6 record");
    found = parse_graph6(line, line_no);
  }
  return *found;
}

}  // namespace rnalab
