#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "antonim/core.hpp"
#include "antonim/solver.hpp"

namespace antonim {

/// A 2-D slice of the n-heap P-table: the first n-3 heaps are fixed by
/// `layer_prefix`, rows and columns range over the next two heaps, and each
/// cell holds the n-th heap that completes a P-position.
struct PTableSpec {
  std::size_t n_heaps = 3;
  std::vector<HeapSize> layer_prefix;
  HeapSize max_index = 0;
  /// Last row heading; defaults to max_index. Lets a table be taller than
  /// it is wide.
  std::optional<HeapSize> max_row;

  HeapSize last_row() const noexcept { return max_row.value_or(max_index); }
};

class InvalidTableSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedFormat : public std::invalid_argument {
 public:
  explicit UnsupportedFormat(std::string_view format);
};

/// Throws InvalidTableSpec.
void validate(const PTableSpec& spec);

using Cell = std::optional<HeapSize>;  // nullopt marks an invalid state ("X")

struct PTable {
  PTableSpec spec;
  std::vector<std::vector<Cell>> cells;  // [row][column]

  std::size_t rows() const noexcept { return cells.size(); }
  std::size_t columns() const noexcept { return cells.empty() ? 0 : cells.front().size(); }
  const Cell& at(std::size_t r, std::size_t c) const { return cells.at(r).at(c); }
};

/// Each cell is computed independently, so `workers` > 1 fills rows on
/// separate threads. That requires a cache built with Threading::shared.
PTable build_table(const PTableSpec& spec, CompletionCache& cache, std::size_t workers = 1);

enum class TableFormat { plain, csv };

/// Throws UnsupportedFormat for anything but "plain" or "csv".
TableFormat parse_table_format(std::string_view name);

std::string render_table(const PTable& table, TableFormat format);
std::string render_table(const PTable& table, std::string_view format);

}  // namespace antonim
