#pragma once

// Published P-tables, transcribed cell for cell as they are usually printed:
// the 3-heap table with rows 0-14 and columns 0-12, and the first two layers
// (first heap 0 and 1) of the 4-heap table for rows/columns 0-5.

#include <vector>

#include "antonim/tables.hpp"

namespace antonim::reference {

struct Table {
  std::vector<HeapSize> layer_prefix;
  std::vector<std::vector<Cell>> cells;  // [row][column]
};

const Table& three_heap();

/// `first_heap` must be 0 or 1.
const Table& four_heap_layer(HeapSize first_heap);

/// Parses rows of whitespace-separated cells, "X" for invalid.
std::vector<std::vector<Cell>> parse_cells(std::string_view text);

/// True if every cell of `expected` equals the same cell of `actual`.
/// `actual` may be larger.
bool covers(const std::vector<std::vector<Cell>>& actual, const Table& expected);

}  // namespace antonim::reference
