#pragma once

// graph6 (McKay) and plain edge-list text formats.
//
// The exhaustive tier decodes into Graph (n <= 64). The codec tier works on
// SparseGraph, an edge list over an arbitrary vertex count, and is meant for
// streaming and format conversion only.

#include <algorithm>
#include <cctype>
#include <iterator>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

struct SparseGraph {
  std::uint64_t n = 0;
  /// Edges (u, v), u < v, in lexicographic order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  friend bool operator==(const SparseGraph&, const SparseGraph&) = default;
};

inline SparseGraph to_sparse(const Graph& g) {
  SparseGraph s;
  s.n = static_cast<std::uint64_t>(g.size());
  for (auto [u, v] : g.edges()) s.edges.emplace_back(u, v);
  return s;
}

inline Graph to_dense(const SparseGraph& s, int limit = kMaxVertices) {
  if (s.n > static_cast<std::uint64_t>(limit)) {
    throw Error(ErrorCode::Oversize, "graph on " + std::to_string(s.n) +
                                         " vertices exceeds limit " + std::to_string(limit));
  }
  Graph g(static_cast<int>(s.n));
  for (auto [u, v] : s.edges) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

namespace detail {

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;  // 2^36 - 1

inline void append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    if (n > kGraph6MaxOrder) throw Error(ErrorCode::Oversize, "order beyond graph6 range");
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

inline int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63) {
    throw Error(ErrorCode::MalformedGraph6, std::string("byte '") + c + "' outside graph6 range");
  }
  return value;
}

/// Parses the order prefix; returns (n, header length).
inline std::pair<std::uint64_t, std::size_t> parse_order(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "empty line");
  if (text[0] != 126) return {static_cast<std::uint64_t>(sextet(text[0])), 1};
  if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw Error(ErrorCode::MalformedGraph6, "truncated 8-byte order");
    std::uint64_t n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    if (n <= 258047) throw Error(ErrorCode::MalformedGraph6, "non-minimal order encoding");
    return {n, 8};
  }
  if (text.size() < 4) throw Error(ErrorCode::MalformedGraph6, "truncated 4-byte order");
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
  if (n <= 62) throw Error(ErrorCode::MalformedGraph6, "non-minimal order encoding");
  return {n, 4};
}

inline std::string_view strip_line(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  return text;
}

}  // namespace detail

/// Codec tier decoder: any order representable in graph6.
inline SparseGraph decode_graph6_sparse(std::string_view line,
                                        std::uint64_t limit = detail::kGraph6MaxOrder) {
  line = detail::strip_line(line);
  auto [n, header] = detail::parse_order(line);
  if (n > limit) {
    throw Error(ErrorCode::Oversize, "graph6 order " + std::to_string(n) + " exceeds limit " +
                                         std::to_string(limit));
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (line.size() - header != body) {
    throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(body) + " body bytes, found " +
                                                std::to_string(line.size() - header));
  }
  SparseGraph g;
  g.n = n;
  std::uint64_t k = 0;
  std::uint64_t col = 1;
  std::uint64_t row = 0;
  for (std::size_t pos = header; pos < line.size(); ++pos) {
    const int value = detail::sextet(line[pos]);
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1;
      if (k >= bits) {
        if (set) throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
        continue;
      }
      if (set) g.edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline std::string encode_graph6(const SparseGraph& g) {
  std::string out;
  detail::append_order(out, g.n);
  const std::uint64_t n = g.n;
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<bool> body(static_cast<std::size_t>(bits), false);
  for (auto [a, b] : g.edges) {
    const std::uint64_t u = std::min(a, b);
    const std::uint64_t v = std::max(a, b);
    if (u == v || v >= n) throw Error(ErrorCode::MalformedInput, "edge outside vertex range");
    body[static_cast<std::size_t>(v * (v - 1) / 2 + u)] = true;
  }
  for (std::size_t i = 0; i < body.size(); i += 6) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b) value = (value << 1) | (i + b < body.size() && body[i + b] ? 1 : 0);
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

/// Exhaustive tier decoder; `limit` caps the order (at most 64).
inline Graph decode_graph6(std::string_view line, int limit = kMaxVertices) {
  return to_dense(decode_graph6_sparse(line, static_cast<std::uint64_t>(limit)), limit);
}

inline std::string encode_graph6(const Graph& g) { return encode_graph6(to_sparse(g)); }

// ---- edge list: "n m" header then m lines "u v" ---------------------------

inline SparseGraph parse_edge_list_sparse(std::istream& in) {
  SparseGraph g;
  std::uint64_t m = 0;
  if (!(in >> g.n >> m)) throw Error(ErrorCode::MalformedInput, "edge list header must be 'n m'");
  for (std::uint64_t i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) throw Error(ErrorCode::MalformedInput, "edge list truncated at edge " + std::to_string(i));
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= g.n || static_cast<std::uint64_t>(v) >= g.n || u == v) {
      throw Error(ErrorCode::MalformedInput, "bad edge " + std::to_string(u) + " " + std::to_string(v));
    }
    auto a = static_cast<std::uint64_t>(std::min(u, v));
    auto b = static_cast<std::uint64_t>(std::max(u, v));
    g.edges.emplace_back(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

inline Graph parse_edge_list(std::string_view text, int limit = kMaxVertices) {
  std::istringstream in{std::string(text)};
  return to_dense(parse_edge_list_sparse(in), limit);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

/// Reads every graph in a text stream: either one edge list (first
/// non-empty line holds two integers) or graph6 lines, one graph per line.
inline std::vector<Graph> read_graphs(std::istream& in, int limit = kMaxVertices) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<Graph> out;
  std::istringstream lines(text);
  std::string line;
  std::string first;
  while (std::getline(lines, line)) {
    std::string_view view = detail::strip_line(line);
    if (!view.empty()) {
      first = std::string(view);
      break;
    }
  }
  if (first.empty()) return out;
  std::istringstream probe(first);
  long long a = 0;
  long long b = 0;
  std::string rest;
  if (first.find(' ') != std::string::npos && (probe >> a >> b) && !(probe >> rest)) {
    out.push_back(parse_edge_list(text, limit));
    return out;
  }
  lines.clear();
  lines.str(text);
  while (std::getline(lines, line)) {
    std::string_view view = detail::strip_line(line);
    if (view.empty() || view.front() == '#') continue;
    out.push_back(decode_graph6(view, limit));
  }
  return out;
}

inline Graph parse_graph(std::string_view text, int limit = kMaxVertices) {
  std::istringstream in{std::string(text)};
  auto graphs = read_graphs(in, limit);
  if (graphs.size() != 1) {
    throw Error(ErrorCode::MalformedInput, "expected exactly one graph, found " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

}  // namespace pivotminor
