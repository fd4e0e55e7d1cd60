#include <gtest/gtest.h>

#include <string>

#include "token_spectra/edge_list.hpp"
#include "token_spectra/error.hpp"
#include "token_spectra/families.hpp"

using namespace token_spectra;

namespace {

bool parse_error(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e.code() == ErrorCode::ParseError;
  }
  return false;
}

}  // namespace

TEST(EdgeListTest, FormatIsCanonical) {
  EXPECT_EQ(format_edge_list(path_graph(3)), "3 2\n0 1\n1 2\n");
  EXPECT_EQ(format_edge_list(Graph(2), {"empty"}), "# empty\n2 0\n");
}

TEST(EdgeListTest, RoundTrip) {
  Graph g = build_kite({cycle_graph(4), 0, 3, 2}).graph;
  EXPECT_EQ(parse_edge_list(format_edge_list(g, {"kite"})), g);
}

TEST(EdgeListTest, CommentsAndBlankLines) {
  Graph g = parse_edge_list("# header comment\n3 1\n\n# mid\n0 2\n");
  EXPECT_EQ(g, Graph(3, {{0, 2}}));
}

TEST(EdgeListTest, Rejects) {
  EXPECT_TRUE(parse_error(""));
  EXPECT_TRUE(parse_error("3 2\n0 1\n"));
  EXPECT_TRUE(parse_error("3 1\n1 0\n"));
  EXPECT_TRUE(parse_error("3 1\n0 3\n"));
  EXPECT_TRUE(parse_error("3 1\n1 1\n"));
  EXPECT_TRUE(parse_error("3 2\n0 1\n0 1\n"));
  EXPECT_TRUE(parse_error("3 1\n0 x\n"));
  EXPECT_TRUE(parse_error("3 1\n0 1 2\n"));
  EXPECT_TRUE(parse_error("3 1\n-1 2\n"));
}

TEST(EdgeListTest, MissingFile) {
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.el"), Error);
}
