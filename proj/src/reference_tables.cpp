#include "antonim/reference_tables.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace antonim::reference {

namespace {

constexpr std::string_view kThreeHeap = R"(
0 2 1 4 3 6 5 8 7 10 9 12 11
2 X 0 5 6 3 4 9 10 7 8 13 14
1 0 X 6 5 4 3 10 9 8 7 14 13
4 5 6 X 0 1 2 11 12 13 14 7 8
3 6 5 0 X 2 1 12 11 14 13 8 7
6 3 4 1 2 X 0 13 14 11 12 9 10
5 4 3 2 1 0 X 14 13 12 11 10 9
8 9 10 11 12 13 14 X 0 1 2 3 4
7 10 9 12 11 14 13 0 X 2 1 4 3
10 7 8 13 14 11 12 1 2 X 0 5 6
9 8 7 14 13 12 11 2 1 0 X 6 5
12 13 14 7 8 9 10 3 4 5 6 X 0
11 14 13 8 7 10 9 4 3 6 5 0 X
14 11 12 9 10 7 8 5 6 3 4 1 2
13 12 11 10 9 8 7 6 5 4 3 2 1
)";

constexpr std::string_view kFourHeapLayer0 = R"(
0 2 1 4 3 6
2 X 0 5 6 3
1 0 X 6 5 4
4 5 6 X 0 1
3 6 5 0 X 2
6 3 4 1 2 X
)";

constexpr std::string_view kFourHeapLayer1 = R"(
2 X 0 5 6 3
X X X X X X
0 X X 4 3 6
5 X 4 X 2 0
6 X 3 2 X 7
3 X 6 0 7 X
)";

}  // namespace

std::vector<std::vector<Cell>> parse_cells(std::string_view text) {
  std::vector<std::vector<Cell>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<Cell> row;
    std::string tok;
    while (tokens >> tok) {
      if (tok == "X")
        row.emplace_back(std::nullopt);
      else
        row.emplace_back(std::stoull(tok));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

const Table& three_heap() {
  static const Table t{{}, parse_cells(kThreeHeap)};
  return t;
}

const Table& four_heap_layer(HeapSize first_heap) {
  static const Table layer0{{0}, parse_cells(kFourHeapLayer0)};
  static const Table layer1{{1}, parse_cells(kFourHeapLayer1)};
  if (first_heap == 0) return layer0;
  if (first_heap == 1) return layer1;
  throw std::out_of_range("no reference layer for first heap " + std::to_string(first_heap));
}

bool covers(const std::vector<std::vector<Cell>>& actual, const Table& expected) {
  if (actual.size() < expected.cells.size()) return false;
  for (std::size_t r = 0; r < expected.cells.size(); ++r) {
    if (actual[r].size() < expected.cells[r].size()) return false;
    for (std::size_t c = 0; c < expected.cells[r].size(); ++c)
      if (actual[r][c] != expected.cells[r][c]) return false;
  }
  return true;
}

}  // namespace antonim::reference
