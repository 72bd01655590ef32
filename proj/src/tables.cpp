#include "antonim/tables.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace antonim {

UnsupportedFormat::UnsupportedFormat(std::string_view format)
    : std::invalid_argument("unsupported table format: " + std::string(format)) {}

void validate(const PTableSpec& spec) {
  if (spec.n_heaps < 3) throw InvalidTableSpec("a table needs at least 3 heaps");
  if (spec.layer_prefix.size() != spec.n_heaps - 3)
    throw InvalidTableSpec("layer prefix must hold " + std::to_string(spec.n_heaps - 3) +
                           " value(s), got " + std::to_string(spec.layer_prefix.size()));
}

namespace {

Cell compute_cell(const PTableSpec& spec, HeapSize row, HeapSize col, CompletionCache& cache) {
  std::vector<HeapSize> heaps = spec.layer_prefix;
  heaps.push_back(row);
  heaps.push_back(col);
  try {
    return completion(CanonicalPosition::from_heaps(heaps), cache);
  } catch (const DuplicatePositiveHeap&) {
    return std::nullopt;
  }
}

void fill_rows(PTable& table, CompletionCache& cache, std::size_t first, std::size_t stride) {
  for (std::size_t r = first; r < table.rows(); r += stride)
    for (std::size_t c = 0; c < table.columns(); ++c)
      table.cells[r][c] = compute_cell(table.spec, r, c, cache);
}

}  // namespace

PTable build_table(const PTableSpec& spec, CompletionCache& cache, std::size_t workers) {
  validate(spec);
  if (workers > 1 && cache.threading() != Threading::shared)
    throw std::invalid_argument("parallel table fill needs a shared cache");

  PTable table{spec, {}};
  table.cells.assign(spec.last_row() + 1, std::vector<Cell>(spec.max_index + 1));

  workers = std::clamp<std::size_t>(workers, 1, table.rows());
  if (workers == 1) {
    fill_rows(table, cache, 0, 1);
    return table;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&table, &cache, w, workers] { fill_rows(table, cache, w, workers); });
  pool.clear();
  return table;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "plain") return TableFormat::plain;
  if (name == "csv") return TableFormat::csv;
  throw UnsupportedFormat(name);
}

namespace {

std::string cell_text(const Cell& cell) { return cell ? std::to_string(*cell) : "X"; }

}  // namespace

std::string render_table(const PTable& table, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::csv) {
    for (std::size_t c = 0; c < table.columns(); ++c) out << ',' << c;
    out << '\n';
    for (std::size_t r = 0; r < table.rows(); ++r) {
      out << r;
      for (const Cell& cell : table.cells[r]) out << ',' << cell_text(cell);
      out << '\n';
    }
    return out.str();
  }

  if (!table.spec.layer_prefix.empty()) {
    out << "layer";
    for (HeapSize v : table.spec.layer_prefix) out << ' ' << v;
    out << '\n';
  }
  out << "#:";
  for (std::size_t c = 0; c < table.columns(); ++c) out << ' ' << c;
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    out << r << ':';
    for (const Cell& cell : table.cells[r]) out << ' ' << cell_text(cell);
    out << '\n';
  }
  return out.str();
}

std::string render_table(const PTable& table, std::string_view format) {
  return render_table(table, parse_table_format(format));
}

}  // namespace antonim
