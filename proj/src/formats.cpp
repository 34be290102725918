#include "arbor/formats.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {
namespace {

constexpr int kGraph6Offset = 63;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw Error(ErrorCode::kTruncated, "empty graph6 line");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::kBadChar, "graph6 byte " + std::to_string(i) + " is outside 63..126",
                  static_cast<std::int64_t>(i));
    }
  }
  if (static_cast<unsigned char>(line[0]) == 126) {
    throw Error(ErrorCode::kLongFormUnsupported, "graph6 long form (n >= 63) is not supported");
  }
  const int n = static_cast<unsigned char>(line[0]) - kGraph6Offset;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::string_view body = line.substr(1);
  if (body.size() < bytes) {
    throw Error(ErrorCode::kTruncated, "graph6 line for n=" + std::to_string(n) + " needs " +
                                           std::to_string(bytes) + " data bytes");
  }
  if (body.size() > bytes) throw Error(ErrorCode::kTrailingGarbage, "excess bytes after graph6 data");

  auto bit = [&](std::size_t k) {
    const int chunk = static_cast<unsigned char>(body[k / 6]) - kGraph6Offset;
    return (chunk >> (5 - k % 6)) & 1;
  };
  for (std::size_t k = bits; k < bytes * 6; ++k) {
    if (bit(k)) throw Error(ErrorCode::kTrailingGarbage, "nonzero graph6 padding bits");
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit(k)) edges.emplace_back(i, j);
    }
  }
  if (n == 0) throw Error(ErrorCode::kInvalidVertexCount, "graph6 line encodes the empty graph");
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorCode::kTooLarge, "graph6 short form holds at most 62 vertices");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const int i = std::min(e.u, e.v);
    const int j = std::max(e.u, e.v);
    const std::size_t k = static_cast<std::size_t>(j) * (j - 1) / 2 + i;
    packed[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  for (unsigned char c : packed) out.push_back(static_cast<char>(c + kGraph6Offset));
  return out;
}

Graph parse_incidence(std::string_view text) {
  std::vector<std::string_view> lines = split_lines(text);
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  const bool any_tokens =
      std::any_of(lines.begin(), lines.end(), [](std::string_view l) { return !trim(l).empty(); });
  if (any_tokens) {
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  }
  const int n = static_cast<int>(lines.size());
  if (n == 0) throw Error(ErrorCode::kInvalidVertexCount, "incidence matrix has no rows");

  std::vector<std::vector<std::string_view>> rows;
  rows.reserve(n);
  for (auto l : lines) rows.push_back(split_tokens(l));
  const std::size_t m = rows[0].size();
  for (int r = 0; r < n; ++r) {
    if (rows[r].size() != m) {
      throw Error(ErrorCode::kRaggedRows,
                  "incidence row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                      " entries, expected " + std::to_string(m),
                  r);
    }
    for (auto tok : rows[r]) {
      if (tok != "0" && tok != "1") {
        throw Error(ErrorCode::kBadToken, "incidence entry '" + std::string(tok) + "' is not 0 or 1", r);
      }
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> ends;
    for (int r = 0; r < n; ++r) {
      if (rows[r][j] == "1") ends.push_back(r);
    }
    if (ends.size() != 2) {
      throw Error(ErrorCode::kBadColumn,
                  "incidence column " + std::to_string(j) + " has " + std::to_string(ends.size()) +
                      " ones, expected 2",
                  static_cast<std::int64_t>(j));
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  return Graph(n, edges);
}

std::string write_incidence(const Graph& g) {
  const IntMatrix b = incidence_matrix(g);
  std::string out;
  for (int r = 0; r < b.rows; ++r) {
    for (int c = 0; c < b.cols; ++c) {
      if (c) out.push_back(' ');
      out.push_back(b(r, c) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

Graph parse_edgelist(std::string_view text) {
  const std::vector<std::string_view> tokens = split_tokens(text);
  std::vector<long long> values;
  values.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tokens[i].data(), tokens[i].data() + tokens[i].size(), v);
    if (ec != std::errc() || ptr != tokens[i].data() + tokens[i].size()) {
      throw Error(ErrorCode::kBadToken, "edge list token '" + std::string(tokens[i]) + "' is not an integer",
                  static_cast<std::int64_t>(i));
    }
    values.push_back(v);
  }
  if (values.size() < 2) throw Error(ErrorCode::kCountMismatch, "edge list needs an 'n m' header");
  const long long n = values[0];
  const long long m = values[1];
  if (m < 0 || static_cast<long long>(values.size()) != 2 + 2 * m) {
    throw Error(ErrorCode::kCountMismatch, "edge list header announces " + std::to_string(m) +
                                               " edges but the body holds " +
                                               std::to_string((values.size() - 2) / 2.0));
  }
  if (n < 1 || n > (1 << 20)) throw Error(ErrorCode::kInvalidVertexCount, "edge list vertex count out of range");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    const long long u = values[2 + 2 * i];
    const long long v = values[3 + 2 * i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "edge " + std::to_string(i) + " has an endpoint outside 0.." +
                                                    std::to_string(n - 1), i);
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

enum class EdgeStyle { kPlain, kBold, kDotted };

std::string render_dot(const Graph& g, const std::vector<EdgeStyle>& styles) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.size(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"e" << e << "\"";
    if (styles[e] == EdgeStyle::kBold) out << ", style=bold";
    if (styles[e] == EdgeStyle::kDotted) out << ", style=dotted";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const Graph& g) {
  return render_dot(g, std::vector<EdgeStyle>(g.size(), EdgeStyle::kPlain));
}

std::string to_dot(const Graph& g, std::span<const EdgeId> highlight) {
  std::vector<EdgeStyle> styles(g.size(), EdgeStyle::kDotted);
  for (EdgeId e : highlight) {
    if (e < 0 || e >= g.size()) {
      throw Error(ErrorCode::kUnknownEdge, "highlighted edge " + std::to_string(e) + " is not in the graph", e);
    }
    styles[e] = EdgeStyle::kBold;
  }
  return render_dot(g, styles);
}

InputFormat detect_format(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto l : split_lines(text)) {
    if (!trim(l).empty()) lines.push_back(trim(l));
  }
  if (lines.empty()) return InputFormat::kIncidence;
  const std::string_view first = lines.front();
  if (first.starts_with(kGraph6Header)) return InputFormat::kGraph6;

  const bool all_binary = std::all_of(lines.begin(), lines.end(), [](std::string_view l) {
    return std::all_of(l.begin(), l.end(), [](char c) { return c == '0' || c == '1' || is_space(c); });
  });
  // "1 0" is the only all-binary text that is a valid edge list (one vertex,
  // no edges) and it is never a valid incidence matrix.
  if (all_binary) return lines.size() == 1 && split_tokens(first).size() == 2 && first.starts_with('1')
                             ? InputFormat::kEdgeList
                             : InputFormat::kIncidence;
  const bool graph6_like = split_tokens(first).size() == 1 &&
                           std::all_of(first.begin(), first.end(), [](char c) {
                             return static_cast<unsigned char>(c) >= 63 && static_cast<unsigned char>(c) <= 126;
                           });
  return graph6_like ? InputFormat::kGraph6 : InputFormat::kEdgeList;
}

Graph parse_graph(std::string_view text, InputFormat format) {
  switch (format) {
    case InputFormat::kGraph6: {
      for (auto l : split_lines(text)) {
        if (!trim(l).empty()) return parse_graph6(l);
      }
      throw Error(ErrorCode::kTruncated, "input holds no graph6 line");
    }
    case InputFormat::kIncidence: return parse_incidence(text);
    case InputFormat::kEdgeList: return parse_edgelist(text);
  }
  throw Error(ErrorCode::kInternal, "unknown input format");
}

}  // namespace arbor
