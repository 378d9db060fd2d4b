#include "skewperm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <utility>
#include <vector>

namespace skewperm {

namespace {

constexpr int kG6Min = 63;   // '?'
constexpr int kG6Max = 126;  // '~'

int g6_value(std::string_view text, std::size_t offset) {
  const unsigned char c = static_cast<unsigned char>(text[offset]);
  if (c < kG6Min || c > kG6Max)
    throw ParseError("graph6 byte out of range at offset " + std::to_string(offset), offset);
  return c - kG6Min;
}

std::string_view strip_line_ending(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view raw) {
  std::string_view text = strip_line_ending(raw);
  std::size_t pos = 0;
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) pos = kPrefix.size();
  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);

  long long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph6 orders beyond three bytes are not supported", pos + 1);
    if (pos + 4 > text.size())
      throw ParseError("truncated graph6 order at offset " + std::to_string(text.size()),
                       text.size());
    n = (static_cast<long long>(g6_value(text, pos + 1)) << 12) |
        (g6_value(text, pos + 2) << 6) | g6_value(text, pos + 3);
    pos += 4;
  } else {
    n = g6_value(text, pos);
    pos += 1;
  }

  const long long pair_bits = n * (n - 1) / 2;
  const std::size_t body_bytes = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (text.size() - pos < body_bytes)
    throw ParseError("truncated graph6 body: need " + std::to_string(body_bytes) +
                         " bytes after the order, got " + std::to_string(text.size() - pos),
                     text.size());
  if (text.size() - pos > body_bytes)
    throw ParseError("trailing bytes after graph6 body at offset " +
                         std::to_string(pos + body_bytes),
                     pos + body_bytes);

  std::vector<Edge> edges;
  long long bit = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) current = g6_value(text, pos + static_cast<std::size_t>(bit / 6));
      if ((current >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  // the remaining padding bits must be zero
  for (; bit < static_cast<long long>(body_bytes) * 6; ++bit) {
    if (bit % 6 == 0) current = g6_value(text, pos + static_cast<std::size_t>(bit / 6));
    if ((current >> (5 - bit % 6)) & 1)
      throw ParseError("nonzero padding bit in graph6 body at offset " +
                           std::to_string(pos + static_cast<std::size_t>(bit / 6)),
                       pos + static_cast<std::size_t>(bit / 6));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Min));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Min));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Min));
    out.push_back(static_cast<char>((n & 63) + kG6Min));
  } else {
    throw std::invalid_argument("write_graph6 supports at most 258047 vertices");
  }
  const long long pair_bits = static_cast<long long>(n) * (n - 1) / 2;
  std::string body(static_cast<std::size_t>((pair_bits + 5) / 6), static_cast<char>(kG6Min));
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j))
        body[static_cast<std::size_t>(bit / 6)] += 1 << (5 - bit % 6);
  return out + body;
}

namespace {

// Splits into non-empty whitespace-separated tokens per line, dropping
// blank lines. Keeps the original 1-based line number for messages.
struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    Line out{line_no, {}};
    while (!line.empty()) {
      const std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string_view::npos) break;
      line.remove_prefix(start);
      const std::size_t len = line.find_first_of(" \t\r");
      out.tokens.push_back(line.substr(0, len));
      line.remove_prefix(len == std::string_view::npos ? line.size() : len);
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
  }
  return lines;
}

int parse_int(std::string_view token, const Line& line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line.number) + ": bad " + what + " '" +
                     std::string(token) + "'");
  return value;
}

struct Header {
  int n = 0;
  int m = 0;
};

// Reads the "n m" header and checks the body line count.
Header read_header(const std::vector<Line>& lines, std::size_t expected_tokens,
                   const char* body_shape) {
  if (lines.empty()) throw ParseError("empty input: expected a 'n m' header line");
  if (lines[0].tokens.size() != 2)
    throw ParseError("line " + std::to_string(lines[0].number) +
                     ": header must be 'n m' (vertex and edge counts)");
  Header h;
  h.n = parse_int(lines[0].tokens[0], lines[0], "vertex count");
  h.m = parse_int(lines[0].tokens[1], lines[0], "edge count");
  if (h.n < 0 || h.m < 0)
    throw ParseError("line " + std::to_string(lines[0].number) + ": counts must be non-negative");
  if (lines.size() - 1 != static_cast<std::size_t>(h.m))
    throw ParseError("expected " + std::to_string(h.m) + " " + body_shape + " lines, got " +
                     std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].tokens.size() != expected_tokens)
      throw ParseError("line " + std::to_string(lines[i].number) + ": expected " + body_shape);
  return h;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenize_lines(text);
  const Header h = read_header(lines, 2, "'u v'");
  std::vector<Edge> edges;
  edges.reserve(h.m);
  for (std::size_t i = 1; i < lines.size(); ++i)
    edges.push_back({parse_int(lines[i].tokens[0], lines[i], "vertex"),
                     parse_int(lines[i].tokens[1], lines[i], "vertex")});
  try {
    return Graph(h.n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

namespace {

struct ArcLines {
  Graph graph;
  std::vector<std::pair<int, int>> arcs;
  std::vector<Rat> weights;  // empty unless weighted
};

ArcLines parse_arcs(std::string_view text, bool weighted) {
  const auto lines = tokenize_lines(text);
  const Header h = read_header(lines, weighted ? 3 : 2, weighted ? "'u v weight'" : "'u v'");
  std::vector<Edge> edges;
  ArcLines out;
  edges.reserve(h.m);
  out.arcs.reserve(h.m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int u = parse_int(lines[i].tokens[0], lines[i], "vertex");
    const int v = parse_int(lines[i].tokens[1], lines[i], "vertex");
    edges.push_back({u, v});
    out.arcs.emplace_back(u, v);
    if (weighted) {
      try {
        out.weights.push_back(parse_rational(lines[i].tokens[2]));
      } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(lines[i].number) + ": " + e.what());
      }
      if (out.weights.back() == 0)
        throw ParseError("line " + std::to_string(lines[i].number) + ": zero weight");
    }
  }
  try {
    out.graph = Graph(h.n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

}  // namespace

OrientedGraph parse_orientation(std::string_view text) {
  ArcLines in = parse_arcs(text, false);
  try {
    return orient(in.graph, in.arcs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string write_orientation(const OrientedGraph& og) {
  std::string out = std::to_string(og.graph().vertex_count()) + " " +
                    std::to_string(og.graph().edge_count()) + "\n";
  for (int e = 0; e < og.graph().edge_count(); ++e) {
    const auto [from, to] = og.arc(e);
    out += std::to_string(from) + " " + std::to_string(to) + "\n";
  }
  return out;
}

WeightedOrientedGraph parse_weighted_orientation(std::string_view text) {
  ArcLines in = parse_arcs(text, true);
  try {
    OrientedGraph og = orient(in.graph, in.arcs);
    // weights arrive in arc-line order; store them in edge-list order
    std::vector<Rat> by_edge(in.weights.size());
    for (std::size_t i = 0; i < in.arcs.size(); ++i)
      by_edge[in.graph.edge_index(in.arcs[i].first, in.arcs[i].second)] = in.weights[i];
    return WeightedOrientedGraph(std::move(og), std::move(by_edge));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string write_weighted_orientation(const WeightedOrientedGraph& wog) {
  const OrientedGraph& og = wog.oriented();
  std::string out = std::to_string(og.graph().vertex_count()) + " " +
                    std::to_string(og.graph().edge_count()) + "\n";
  for (int e = 0; e < og.graph().edge_count(); ++e) {
    const auto [from, to] = og.arc(e);
    out += std::to_string(from) + " " + std::to_string(to) + " " +
           rat_string(wog.weights()[e]) + "\n";
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty input: expected the matrix order");
  if (lines[0].tokens.size() != 1)
    throw ParseError("line " + std::to_string(lines[0].number) +
                     ": the first line must hold only the order");
  const int n = parse_int(lines[0].tokens[0], lines[0], "order");
  if (n < 0) throw ParseError("matrix order must be non-negative");
  if (lines.size() - 1 != static_cast<std::size_t>(n))
    throw ParseError("expected " + std::to_string(n) + " rows, got " +
                     std::to_string(lines.size() - 1));
  std::vector<Rat> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != static_cast<std::size_t>(n))
      throw ParseError("line " + std::to_string(lines[i].number) + ": expected " +
                       std::to_string(n) + " entries, got " +
                       std::to_string(lines[i].tokens.size()));
    for (std::string_view token : lines[i].tokens) {
      try {
        entries.push_back(parse_rational(token));
      } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(lines[i].number) + ": " + e.what());
      }
    }
  }
  return Matrix(n, std::move(entries));
}

std::string write_matrix(const Matrix& a) {
  std::string out = std::to_string(a.order()) + "\n";
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      if (j > 0) out += " ";
      out += rat_string(a.at(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace skewperm
