#pragma once

// Constructive solution of Antonim.
//
// For given heaps g (canonical, zeros dropped), completion(g) is the least
// non-negative z outside
//
//   g  ∪  { completion(g with one heap lowered by a legal amount) }
//
// and (g, z) is then the unique P-position extending g. A position is P
// exactly when its largest heap equals the completion of the others.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "antonim/cache.hpp"
#include "antonim/core.hpp"

namespace antonim {

using CompletionCache = WriteOnceCache<HeapSize>;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values that a completion must avoid. Backed by a bitset sized to the
/// number of insertions, since the least missing value can never exceed it.
class ExclusionSet {
 public:
  /// `capacity` is the most values that will ever be inserted.
  explicit ExclusionSet(std::size_t capacity);

  /// Values >= the bitset width are dropped; they cannot affect the mex.
  void insert(HeapSize value) noexcept;
  bool contains(HeapSize value) const noexcept;

  /// Least non-negative integer not in the set.
  HeapSize mex() const;

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

/// Throws InvalidInput on values that are not strictly ascending positives.
CanonicalPosition checked_given(std::vector<HeapSize> given);

HeapSize completion(const CanonicalPosition& given, CompletionCache& cache);

Classification classify(const CanonicalPosition& pos, CompletionCache& cache);

/// Winning move from `state`, or nullopt when `state` is a P-position. Among
/// several winning moves the least (heap_index, new_size) is returned.
std::optional<Move> best_move(const RawState& state, CompletionCache& cache);

/// Plain Nim; duplicates allowed.
struct NimState {
  std::vector<HeapSize> heaps;
};

/// Bouton's rule: P iff the xor of all heaps is 0.
Classification nim_classify(const NimState& s);

struct Theorem2Mismatch {
  HeapSize x1;
  HeapSize x2;
  HeapSize z;
};

struct Theorem2Report {
  HeapSize max_value = 0;
  std::size_t pairs_checked = 0;
  std::vector<Theorem2Mismatch> mismatches;
  // The four-heap case where shifting by one does not carry over: (1,2,5,6)
  // is Nim-P while (0,1,4,5) is Antonim-N.
  bool counterexample_nim_p = false;
  bool counterexample_antonim_n = false;

  bool counterexample_confirmed() const noexcept {
    return counterexample_nim_p && counterexample_antonim_n;
  }
  bool clean() const noexcept { return mismatches.empty() && counterexample_confirmed(); }
};

/// For every 0 <= x1 < x2 <= max_value whose triple (x1, x2, z) with
/// z = completion({x1, x2}) has at most one zero, checks that
/// (x1+1, x2+1, z+1) is a Nim P-position. Throws InvalidInput if
/// max_value < 1.
Theorem2Report theorem2_check(HeapSize max_value, CompletionCache& cache);

}  // namespace antonim
