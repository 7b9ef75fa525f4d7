#include <gtest/gtest.h>

#include <sstream>

#include "pivotminor/codec.hpp"
#include "support.hpp"

using namespace pivotminor;

// Independent graph6 writer: bits of the upper triangle, column by column.
static std::string reference_graph6(const Graph& g) {
  std::string bits;
  for (Vertex j = 1; j < g.size(); ++j)
    for (Vertex i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
  while (bits.size() % 6) bits.push_back('0');
  std::string out;
  const int n = g.size();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + (n >> 12)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) out.push_back(static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2)));
  return out;
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(decode_graph6("C~"), complete_graph(4));
  EXPECT_EQ(decode_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(decode_graph6("@"), Graph(1));
  EXPECT_EQ(encode_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(encode_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  // Petersen graph, nauty's standard labelling.
  EXPECT_EQ(decode_graph6("IheA@GUAo").edge_count(), 15U);
}

TEST(Graph6, MatchesReferenceWriter) {
  for (int t = 0; t < 300; ++t) {
    Graph g = testing_support::random_graph(64);
    EXPECT_EQ(encode_graph6(g), reference_graph6(g));
  }
}

TEST(Graph6, RoundTrip) {
  for (int t = 0; t < 300; ++t) {
    Graph g = testing_support::random_graph(64);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformed) {
  auto code = [](std::string_view s) {
    try {
      decode_graph6(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidPlan;  // sentinel: no error
  };
  EXPECT_EQ(code(""), ErrorCode::MalformedGraph6);
  EXPECT_EQ(code("C"), ErrorCode::MalformedGraph6);        // missing body
  EXPECT_EQ(code("C~~"), ErrorCode::MalformedGraph6);      // body too long
  EXPECT_EQ(code("B\x7f"), ErrorCode::MalformedGraph6);    // byte out of range
  EXPECT_EQ(code("Bx"), ErrorCode::MalformedGraph6);       // padding bit set
  EXPECT_EQ(code("~??A"), ErrorCode::MalformedGraph6);     // non-minimal long form
}

TEST(Graph6, OversizeAboveTier) {
  SparseGraph big;
  big.n = 100;
  big.edges = {{0, 99}, {3, 50}};
  const std::string text = encode_graph6(big);
  EXPECT_EQ(text[0], 126);
  EXPECT_EQ(decode_graph6_sparse(text), big);
  try {
    decode_graph6(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Oversize);
  }
  EXPECT_THROW(decode_graph6("C~", 3), Error);
}

TEST(Graph6, SparseTierLongForms) {
  SparseGraph g;
  g.n = 300000;  // needs the 8-byte order header
  g.edges = {{1, 2}};
  std::string head;
  detail::append_order(head, g.n);
  EXPECT_EQ(head.size(), 8U);
  auto [n, len] = detail::parse_order(head);
  EXPECT_EQ(n, 300000U);
  EXPECT_EQ(len, 8U);
}

TEST(EdgeList, ParseAndFormat) {
  Graph p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(p4, path_graph(4));
  EXPECT_EQ(format_edge_list(p4), "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), Error);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), Error);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), Error);
}

TEST(ReadGraphs, AutoDetects) {
  std::istringstream g6(">>graph6<<C~\nBw\n\n");
  auto a = read_graphs(g6);
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a[0], complete_graph(4));
  EXPECT_EQ(a[1], complete_graph(3));
  std::istringstream el("3 2\n0 1\n1 2\n");
  auto b = read_graphs(el);
  ASSERT_EQ(b.size(), 1U);
  EXPECT_EQ(b[0], path_graph(3));
  EXPECT_EQ(parse_graph("Bg"), path_graph(3));
}
