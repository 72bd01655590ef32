#include "antonim/tables.hpp"

#include <gtest/gtest.h>

#include <set>

#include "antonim/reference_tables.hpp"

namespace antonim {
namespace {

PTable make(std::size_t n, std::vector<HeapSize> prefix, HeapSize max, std::optional<HeapSize> max_row = {}) {
  CompletionCache cache;
  return build_table({n, std::move(prefix), max, max_row}, cache);
}

TEST(BuildTable, ThreeHeapMatchesReference) {
  const PTable t = make(3, {}, 12, 14);
  EXPECT_EQ(t.rows(), 15u);
  EXPECT_EQ(t.columns(), 13u);
  EXPECT_EQ(t.cells, reference::three_heap().cells);
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.columns(); ++c)
      EXPECT_EQ(!t.at(r, c).has_value(), r == c && r > 0) << r << "," << c;
}

TEST(BuildTable, FourHeapLayersMatchReference) {
  EXPECT_EQ(make(4, {0}, 5).cells, reference::four_heap_layer(0).cells);
  const PTable layer1 = make(4, {1}, 5);
  EXPECT_EQ(layer1.cells, reference::four_heap_layer(1).cells);
  EXPECT_EQ(layer1.at(2, 3), Cell{4});
  EXPECT_EQ(layer1.at(4, 5), Cell{7});
  for (std::size_t i = 0; i <= 5; ++i) {
    EXPECT_FALSE(layer1.at(1, i).has_value());
    EXPECT_FALSE(layer1.at(i, 1).has_value());
  }
}

TEST(BuildTable, LayerZeroIsThreeHeapTable) {
  EXPECT_EQ(make(4, {0}, 5).cells, make(3, {}, 5).cells);
  EXPECT_EQ(make(5, {0, 0}, 7).cells, make(3, {}, 7).cells);
}

TEST(BuildTable, RejectsBadSpecs) {
  CompletionCache cache;
  EXPECT_THROW(build_table({4, {1, 2}, 5, {}}, cache), InvalidTableSpec);
  EXPECT_THROW(build_table({3, {1}, 5, {}}, cache), InvalidTableSpec);
  EXPECT_THROW(build_table({2, {}, 5, {}}, cache), InvalidTableSpec);
  EXPECT_THROW(build_table({3, {}, 5, {}}, cache, 4), std::invalid_argument);
}

// Sequential fill of the 3-heap table: each entry is the least value not
// already used earlier in its row or column and not equal to a positive
// heading. Independent of completion().
std::vector<std::vector<Cell>> row_scan_fill(HeapSize max) {
  std::vector<std::vector<Cell>> g(max + 1, std::vector<Cell>(max + 1));
  for (HeapSize r = 0; r <= max; ++r) {
    for (HeapSize c = 0; c <= max; ++c) {
      if (r == c && r > 0) continue;
      std::set<HeapSize> used;
      for (HeapSize k = 0; k < c; ++k)
        if (g[r][k]) used.insert(*g[r][k]);
      for (HeapSize k = 0; k < r; ++k)
        if (g[k][c]) used.insert(*g[k][c]);
      if (r > 0) used.insert(r);
      if (c > 0) used.insert(c);
      HeapSize z = 0;
      while (used.count(z)) ++z;
      g[r][c] = z;
    }
  }
  return g;
}

TEST(BuildTable, ThreeHeapMatchesRowScanFill) {
  EXPECT_EQ(make(3, {}, 40).cells, row_scan_fill(40));
}

TEST(BuildTable, SymmetricWithDistinctRows) {
  for (const PTable& t : {make(3, {}, 30), make(4, {2}, 16), make(5, {1, 3}, 12)}) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
      std::set<HeapSize> seen;
      for (std::size_t c = 0; c < t.columns(); ++c) {
        EXPECT_EQ(t.at(r, c), t.at(c, r));
        if (t.at(r, c)) EXPECT_TRUE(seen.insert(*t.at(r, c)).second) << "row " << r << " repeats " << *t.at(r, c);
      }
    }
  }
}

TEST(BuildTable, InvalidExactlyOnPositiveDuplicates) {
  const PTable t = make(5, {2, 4}, 6);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.columns(); ++c) {
      std::multiset<HeapSize> m{2, 4, r, c};
      bool dup = false;
      for (HeapSize v : m)
        if (v > 0 && m.count(v) > 1) dup = true;
      EXPECT_EQ(!t.at(r, c).has_value(), dup);
    }
  }
}

TEST(BuildTable, ParallelFillMatchesSequential) {
  CompletionCache shared(Threading::shared);
  const PTable par = build_table({4, {3}, 20, {}}, shared, 4);
  EXPECT_EQ(par.cells, make(4, {3}, 20).cells);
}

TEST(RenderTable, PlainLayout) {
  const std::string text = render_table(make(3, {}, 12), "plain");
  EXPECT_EQ(text.substr(0, text.find('\n')), "#: 0 1 2 3 4 5 6 7 8 9 10 11 12");
  const std::string row0 = text.substr(text.find('\n') + 1);
  EXPECT_EQ(row0.rfind("0: 0 2 1 4 3 6 5 ", 0), 0u);
  EXPECT_NE(text.find("\n1: 2 X 0 5"), std::string::npos);
}

TEST(RenderTable, SingleCell) {
  EXPECT_EQ(render_table(make(3, {}, 0), TableFormat::plain), "#: 0\n0: 0\n");
  EXPECT_EQ(render_table(make(3, {}, 0), TableFormat::csv), ",0\n0,0\n");
}

TEST(RenderTable, PlainLayerHeading) {
  const std::string text = render_table(make(4, {1}, 2), "plain");
  EXPECT_EQ(text, "layer 1\n#: 0 1 2\n0: 2 X 0\n1: X X X\n2: 0 X X\n");
}

TEST(RenderTable, Csv) {
  EXPECT_EQ(render_table(make(3, {}, 2), "csv"), ",0,1,2\n0,0,2,1\n1,2,X,0\n2,1,0,X\n");
}

TEST(RenderTable, UnsupportedFormat) {
  EXPECT_THROW(render_table(make(3, {}, 2), "yaml"), UnsupportedFormat);
}

}  // namespace
}  // namespace antonim
