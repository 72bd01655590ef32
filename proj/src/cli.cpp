#include "antonim/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "antonim/oracle.hpp"
#include "antonim/reference_tables.hpp"
#include "antonim/service.hpp"
#include "antonim/solver.hpp"
#include "antonim/tables.hpp"

namespace antonim::cli {

namespace {

std::string describe(const Move& m) {
  return "take heap " + std::to_string(m.heap_index) + " to " + std::to_string(m.new_size);
}

int cmd_classify(const std::vector<HeapSize>& heaps, std::ostream& out) {
  CompletionCache cache;
  const RawState state = RawState::validate(heaps);
  if (auto m = best_move(state, cache))
    out << "N — " << describe(*m) << '\n';
  else
    out << "P\n";
  return ok;
}

int cmd_best_move(const std::vector<HeapSize>& heaps, std::ostream& out) {
  CompletionCache cache;
  const RawState state = RawState::validate(heaps);
  if (auto m = best_move(state, cache))
    out << describe(*m) << '\n';
  else
    out << "none\n";
  return ok;
}

int cmd_complete(const std::vector<HeapSize>& heaps, std::ostream& out) {
  CompletionCache cache;
  out << completion(CanonicalPosition::from_heaps(heaps), cache) << '\n';
  return ok;
}

int cmd_table(const PTableSpec& spec, const std::string& format, std::ostream& out) {
  const TableFormat f = parse_table_format(format);
  CompletionCache cache;
  out << render_table(build_table(spec, cache), f);
  return ok;
}

// A 3-heap P-position {a < b < c} with c <= 14 sits in the reference table at
// row c, column a, with value b (zeros fill missing heaps).
bool listed_in_three_heap_reference(const CanonicalPosition& p) {
  std::vector<HeapSize> h(3 - p.size(), 0);
  h.insert(h.end(), p.values().begin(), p.values().end());
  const auto& cells = reference::three_heap().cells;
  const HeapSize row = h[2], col = h[0], val = h[1];
  if (row >= cells.size() || col >= cells[row].size()) return false;
  return cells[row][col] == Cell{val};
}

int cmd_verify(std::size_t max_heaps, HeapSize max_value, std::ostream& out) {
  CompletionCache cache;
  OracleCache oracle;
  std::size_t checked = 0, p_count = 0;
  std::vector<std::string> problems;
  const bool compare_reference = max_heaps <= 3 && max_value <= 14;
  std::size_t unlisted = 0;

  for (const CanonicalPosition& pos : enumerate_positions(max_heaps, max_value)) {
    ++checked;
    const Classification fast = classify(pos, cache);
    const Classification truth = oracle_classify(pos, oracle);
    if (fast != truth) {
      problems.push_back("mismatch at " + pos.to_string() + ": solver " + to_string(fast) +
                         ", oracle " + to_string(truth));
      continue;
    }
    if (truth == Classification::P) {
      ++p_count;
      if (compare_reference && !listed_in_three_heap_reference(pos)) {
        ++unlisted;
        problems.push_back("P-position " + pos.to_string() + " missing from the reference 3-heap table");
      }
    }
  }

  for (const auto& p : problems) out << p << '\n';
  const std::size_t mismatches = problems.size() - unlisted;
  out << checked << " positions checked (" << p_count << " P), " << mismatches << " mismatches";
  if (compare_reference) out << ", " << unlisted << " missing from reference table";
  out << ", " << (problems.empty() ? "OK" : "FAIL") << '\n';
  return problems.empty() ? ok : mismatch;
}

int cmd_theorem2(HeapSize max_value, std::ostream& out) {
  CompletionCache cache;
  const Theorem2Report r = theorem2_check(max_value, cache);
  for (const auto& m : r.mismatches) {
    out << "mismatch: (" << m.x1 << "," << m.x2 << "," << m.z << ") -> Nim (" << m.x1 + 1 << ","
        << m.x2 + 1 << "," << m.z + 1 << ") is not P\n";
  }
  out << r.pairs_checked << " pairs checked, " << r.mismatches.size() << " mismatches; ";
  if (r.counterexample_confirmed())
    out << "4-heap counterexample confirmed\n";
  else
    out << "4-heap counterexample NOT confirmed\n";
  return r.clean() ? ok : mismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect-play solver and analysis toolkit for Antonim", "antonim"};
  app.require_subcommand(1);

  std::vector<HeapSize> heaps;

  auto* classify_cmd = app.add_subcommand("classify", "Print P or N for a position, with a winning move for N");
  classify_cmd->add_option("heaps", heaps, "Heap sizes")->required();

  auto* complete_cmd = app.add_subcommand("complete", "Print the heap size that makes the given heaps a P-position");
  complete_cmd->add_option("heaps", heaps, "Heap sizes");

  auto* best_cmd = app.add_subcommand("best-move", "Print the winning move, or 'none' from a P-position");
  best_cmd->add_option("heaps", heaps, "Heap sizes")->required();

  PTableSpec spec;
  HeapSize max_row = 0;
  std::string format = "plain";
  auto* table_cmd = app.add_subcommand("table", "Render a 2-D slice of the P-position table");
  table_cmd->add_option("--heaps", spec.n_heaps, "Number of heaps (>= 3)")->required();
  table_cmd->add_option("--prefix", spec.layer_prefix, "Fixed sizes of the first heaps-3 heaps");
  table_cmd->add_option("--max", spec.max_index, "Last row/column heading")->required();
  auto* max_row_opt = table_cmd->add_option("--max-row", max_row, "Last row heading (default: --max)");
  table_cmd->add_option("--format", format, "plain or csv");

  std::size_t max_heaps = 0;
  HeapSize max_value = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver with brute force on every small position");
  verify_cmd->add_option("--max-heaps", max_heaps, "Largest number of nonempty heaps")->required();
  verify_cmd->add_option("--max-value", max_value, "Largest heap size")->required();

  HeapSize t2_max = 0;
  auto* t2_cmd = app.add_subcommand("theorem2", "Check the 3-heap shift-by-one correspondence with Nim");
  t2_cmd->add_option("--max", t2_max, "Largest heap size in the sweep (>= 1)")->required();

  ServeOptions serve_opts;
  std::string transcript = serve_opts.transcript.string();
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP game service");
  serve_cmd->add_option("--port", serve_opts.port, "TCP port");
  serve_cmd->add_option("--transcript", transcript, "NDJSON transcript path");
  serve_cmd->add_option("--static-dir", static_dir, "Directory with the web UI bundle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg_out, msg_err;
    const int code = app.exit(e, msg_out, msg_err);
    out << msg_out.str();
    err << msg_err.str();
    return code == 0 ? ok : usage;
  }

  try {
    if (*classify_cmd) return cmd_classify(heaps, out);
    if (*complete_cmd) return cmd_complete(heaps, out);
    if (*best_cmd) return cmd_best_move(heaps, out);
    if (*table_cmd) {
      if (*max_row_opt) spec.max_row = max_row;
      return cmd_table(spec, format, out);
    }
    if (*verify_cmd) {
      if (max_heaps < 1) throw std::invalid_argument("--max-heaps must be at least 1");
      return cmd_verify(max_heaps, max_value, out);
    }
    if (*t2_cmd) return cmd_theorem2(t2_max, out);
    if (*serve_cmd) {
      serve_opts.transcript = transcript;
      serve_opts.static_dir = static_dir;
      err << "serving on port " << serve_opts.port << '\n';
      if (!serve(serve_opts)) {
        err << "could not listen on port " << serve_opts.port << '\n';
        return usage;
      }
      return ok;
    }
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return usage;
  } catch (const std::runtime_error& e) {
    err << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace antonim::cli
