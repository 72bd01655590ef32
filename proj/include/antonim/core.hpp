#pragma once

// Game rules of Antonim: Nim where no two nonempty heaps may hold the same
// number of chips. Empty heaps may repeat.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace antonim {

/// Chip count of one heap. Bounded by 64-bit unsigned range; no bigints.
using HeapSize = std::uint64_t;

enum class Classification : std::uint8_t { P, N };

const char* to_string(Classification c) noexcept;

class DuplicatePositiveHeap : public std::invalid_argument {
 public:
  explicit DuplicatePositiveHeap(HeapSize value);
  HeapSize value() const noexcept { return value_; }

 private:
  HeapSize value_;
};

class EmptyState : public std::invalid_argument {
 public:
  EmptyState();
};

enum class MoveRule : std::uint8_t {
  heap_index_out_of_range,
  no_chips_taken,
  growth,
  positive_duplicate,
};

const char* to_string(MoveRule rule) noexcept;

class IllegalMove : public std::invalid_argument {
 public:
  explicit IllegalMove(MoveRule rule);
  MoveRule rule() const noexcept { return rule_; }

 private:
  MoveRule rule_;
};

struct Move {
  std::size_t heap_index = 0;
  HeapSize new_size = 0;

  friend auto operator<=>(const Move&, const Move&) = default;
};

/// Strictly ascending positive heap sizes; the solver's key. Zero heaps are
/// dropped because they admit no moves.
class CanonicalPosition {
 public:
  CanonicalPosition() = default;

  /// Throws DuplicatePositiveHeap on repeated positives. Zeros are dropped.
  static CanonicalPosition from_heaps(std::span<const HeapSize> heaps);
  static CanonicalPosition from_heaps(std::initializer_list<HeapSize> heaps) {
    return from_heaps(std::span<const HeapSize>(heaps.begin(), heaps.size()));
  }

  /// Takes values that are already strictly ascending and positive.
  /// Throws std::invalid_argument otherwise.
  static CanonicalPosition from_sorted(std::vector<HeapSize> values);

  std::span<const HeapSize> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool contains(HeapSize v) const noexcept;
  HeapSize max() const { return values_.back(); }
  HeapSize total() const noexcept;

  /// Position with `value` added. Adding 0 is a no-op. Precondition: value
  /// is not already present.
  CanonicalPosition with(HeapSize value) const;
  /// Position with the element at `index` removed.
  CanonicalPosition without_index(std::size_t index) const;
  /// Element at `index` replaced by `new_value` (0 drops it). Precondition:
  /// new_value is 0 or not present elsewhere.
  CanonicalPosition replaced(std::size_t index, HeapSize new_value) const;

  std::string to_string() const;

  friend bool operator==(const CanonicalPosition&, const CanonicalPosition&) = default;
  friend auto operator<=>(const CanonicalPosition&, const CanonicalPosition&) = default;

 private:
  explicit CanonicalPosition(std::vector<HeapSize> v) : values_(std::move(v)) {}
  std::vector<HeapSize> values_;
};

struct CanonicalPositionHash {
  std::size_t operator()(const CanonicalPosition& p) const noexcept;
};

/// Ordered heap sizes as a player sees them. Indices matter for moves.
class RawState {
 public:
  /// Throws EmptyState or DuplicatePositiveHeap.
  static RawState validate(std::vector<HeapSize> heaps);

  std::span<const HeapSize> heaps() const noexcept { return heaps_; }
  std::size_t size() const noexcept { return heaps_.size(); }
  HeapSize operator[](std::size_t i) const { return heaps_[i]; }
  HeapSize total() const noexcept;
  bool is_terminal() const noexcept;

  std::string to_string() const;

  friend bool operator==(const RawState&, const RawState&) = default;
  friend RawState apply_move(const RawState& state, const Move& move);

 private:
  explicit RawState(std::vector<HeapSize> h) : heaps_(std::move(h)) {}
  std::vector<HeapSize> heaps_;
};

inline RawState validate_state(std::vector<HeapSize> heaps) {
  return RawState::validate(std::move(heaps));
}

CanonicalPosition canonicalize(const RawState& state);

/// Legal moves in (heap_index, new_size) ascending order.
std::vector<Move> legal_moves(const RawState& state);

/// Returns the rule `move` breaks in `state`, or nullopt if it is legal.
std::optional<MoveRule> check_move(const RawState& state, const Move& move) noexcept;

/// Throws IllegalMove naming the violated rule.
RawState apply_move(const RawState& state, const Move& move);

/// Calls `visit` for every position reachable in one move from `pos`, in
/// order of (element index, new value). Works on the canonical form directly.
template <class Visit>
void for_each_successor(const CanonicalPosition& pos, Visit&& visit) {
  const auto vals = pos.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (HeapSize v = 0; v < vals[i]; ++v) {
      if (v != 0 && pos.contains(v)) continue;
      visit(pos.replaced(i, v));
    }
  }
}

std::vector<CanonicalPosition> successors(const CanonicalPosition& pos);

/// Every canonical position with at most `max_heaps` heaps, all values in
/// 1..max_value, in ascending (size, lexicographic) order.
std::vector<CanonicalPosition> enumerate_positions(std::size_t max_heaps, HeapSize max_value);

}  // namespace antonim
