#include "sumfree/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sumfree {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<std::string_view> meaningful_lines(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  for (auto line : split(text, sep)) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

Graph parse_edge_lines(const std::vector<std::string_view>& lines) {
  if (lines.empty()) throw std::invalid_argument("edge list is empty");
  const int n = to_int(lines[0], "vertex count");
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 64]");
  Graph g(n);
  auto vertex = [&](std::string_view s) {
    const int v = to_int(s, "vertex index");
    if (v < 0 || v >= n) throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range");
    return v;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto w = words(lines[i]);
    if (w.size() == 2 && w[0] == "loop") {
      g.add_loop(vertex(w[1]));
    } else if (w.size() == 2) {
      g.add_edge(vertex(w[0]), vertex(w[1]));
    } else {
      throw std::invalid_argument("malformed edge line '" + std::string(lines[i]) + "'");
    }
  }
  return g;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("byte outside the graph6 range 63..126");
  }
  const int n = text[0] - 63;
  if (n > 62) throw std::invalid_argument("graph6 multi-byte order header is not supported (n > 62)");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw std::invalid_argument("graph6 string has " + std::to_string(text.size() - 1) + " data bytes, expected " +
                                std::to_string(bytes));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k) {
    if (((text[1 + k / 6] - 63) >> (5 - k % 6)) & 1) throw std::invalid_argument("non-zero graph6 padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  if (g.loops() != 0) throw std::invalid_argument("graph6 cannot encode loops");
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 output limited to n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  for (int v = 0; v < g.order(); ++v) {
    if (g.has_loop(v)) os << "loop " << v << '\n';
  }
  return os.str();
}

Graph parse_gadget(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw std::invalid_argument("empty graph literal");
  if (token == "D6") return gadgets::d6();
  const char kind = token[0];
  std::string_view rest = token.substr(1);
  bool plus = false;
  if (kind == 'T' && rest.ends_with('+')) {
    plus = true;
    rest.remove_suffix(1);
  }
  if (!all_digits(rest)) throw std::invalid_argument("unknown graph literal '" + std::string(token) + "'");
  const int k = to_int(rest, "gadget size");
  switch (kind) {
    case 'K': return gadgets::complete(k);
    case 'C': return gadgets::cycle(k);
    case 'P': return gadgets::path(k);
    case 'E': return gadgets::edgeless(k);
    case 'T': return plus ? gadgets::prism_plus(k) : gadgets::prism(k);
    default: break;
  }
  throw std::invalid_argument("unknown graph literal '" + std::string(token) + "'");
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return parse_edge_lines(meaningful_lines(text, '\n'));
    case GraphFormat::Graph6: return parse_graph6(text);
  }
  throw std::invalid_argument("unknown graph format");
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return emit_edge_list(g);
    case GraphFormat::Graph6: return emit_graph6(g);
  }
  throw std::invalid_argument("unknown graph format");
}

GraphFormat detect_format(std::string_view text) {
  const auto lines = meaningful_lines(text, '\n');
  if (!lines.empty() && all_digits(lines[0])) return GraphFormat::EdgeList;
  return GraphFormat::Graph6;
}

Graph parse_graph_literal(std::string_view literal) {
  if (literal.find(';') != std::string_view::npos || literal.find('\n') != std::string_view::npos) {
    std::string normalized(literal);
    std::replace(normalized.begin(), normalized.end(), ';', '\n');
    return parse_edge_lines(meaningful_lines(normalized, '\n'));
  }
  std::vector<Graph> parts;
  for (auto token : split(literal, '|')) parts.push_back(parse_gadget(token));
  if (parts.size() == 1) return parts.front();
  return disjoint_union(parts);
}

}  // namespace sumfree
