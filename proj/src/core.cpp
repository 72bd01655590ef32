#include "antonim/core.hpp"

#include <algorithm>
#include <numeric>

namespace antonim {

const char* to_string(Classification c) noexcept {
  return c == Classification::P ? "P" : "N";
}

DuplicatePositiveHeap::DuplicatePositiveHeap(HeapSize value)
    : std::invalid_argument("duplicate positive heap: " + std::to_string(value)),
      value_(value) {}

EmptyState::EmptyState() : std::invalid_argument("state has no heaps") {}

const char* to_string(MoveRule rule) noexcept {
  switch (rule) {
    case MoveRule::heap_index_out_of_range:
      return "heap index out of range";
    case MoveRule::no_chips_taken:
      return "no chips taken";
    case MoveRule::growth:
      return "heap cannot grow";
    case MoveRule::positive_duplicate:
      return "positive duplicate";
  }
  return "unknown";
}

IllegalMove::IllegalMove(MoveRule rule)
    : std::invalid_argument(std::string("illegal move: ") + to_string(rule)), rule_(rule) {}

namespace {

std::string join(std::span<const HeapSize> v, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  out += close;
  return out;
}

}  // namespace

CanonicalPosition CanonicalPosition::from_heaps(std::span<const HeapSize> heaps) {
  std::vector<HeapSize> v;
  v.reserve(heaps.size());
  for (HeapSize h : heaps)
    if (h != 0) v.push_back(h);
  std::sort(v.begin(), v.end());
  if (auto dup = std::adjacent_find(v.begin(), v.end()); dup != v.end())
    throw DuplicatePositiveHeap(*dup);
  return CanonicalPosition(std::move(v));
}

CanonicalPosition CanonicalPosition::from_sorted(std::vector<HeapSize> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0 || (i && values[i - 1] >= values[i]))
      throw std::invalid_argument("canonical values must be strictly ascending and positive");
  }
  return CanonicalPosition(std::move(values));
}

bool CanonicalPosition::contains(HeapSize v) const noexcept {
  return std::binary_search(values_.begin(), values_.end(), v);
}

HeapSize CanonicalPosition::total() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), HeapSize{0});
}

CanonicalPosition CanonicalPosition::with(HeapSize value) const {
  if (value == 0) return *this;
  std::vector<HeapSize> v;
  v.reserve(values_.size() + 1);
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  v.insert(v.end(), values_.begin(), it);
  v.push_back(value);
  v.insert(v.end(), it, values_.end());
  return CanonicalPosition(std::move(v));
}

CanonicalPosition CanonicalPosition::without_index(std::size_t index) const {
  std::vector<HeapSize> v;
  v.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (i != index) v.push_back(values_[i]);
  return CanonicalPosition(std::move(v));
}

CanonicalPosition CanonicalPosition::replaced(std::size_t index, HeapSize new_value) const {
  // Values only shrink, so the new value slides left into place.
  std::vector<HeapSize> v;
  v.reserve(values_.size());
  bool placed = new_value == 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i == index) continue;
    if (!placed && values_[i] > new_value) {
      v.push_back(new_value);
      placed = true;
    }
    v.push_back(values_[i]);
  }
  if (!placed) v.push_back(new_value);
  return CanonicalPosition(std::move(v));
}

std::string CanonicalPosition::to_string() const { return join(values_, '(', ')'); }

std::size_t CanonicalPositionHash::operator()(const CanonicalPosition& p) const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL;
  for (HeapSize v : p.values()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  h ^= p.size();
  h *= 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

RawState RawState::validate(std::vector<HeapSize> heaps) {
  if (heaps.empty()) throw EmptyState();
  // Throws on a duplicated positive value.
  (void)CanonicalPosition::from_heaps(heaps);
  return RawState(std::move(heaps));
}

HeapSize RawState::total() const noexcept {
  return std::accumulate(heaps_.begin(), heaps_.end(), HeapSize{0});
}

bool RawState::is_terminal() const noexcept {
  return std::all_of(heaps_.begin(), heaps_.end(), [](HeapSize h) { return h == 0; });
}

std::string RawState::to_string() const { return join(heaps_, '[', ']'); }

CanonicalPosition canonicalize(const RawState& state) {
  return CanonicalPosition::from_heaps(state.heaps());
}

std::optional<MoveRule> check_move(const RawState& state, const Move& move) noexcept {
  if (move.heap_index >= state.size()) return MoveRule::heap_index_out_of_range;
  const HeapSize current = state[move.heap_index];
  if (move.new_size == current) return MoveRule::no_chips_taken;
  // A target equal to another heap is reported as a duplicate even when it
  // would also grow the heap.
  if (move.new_size != 0) {
    for (std::size_t i = 0; i < state.size(); ++i)
      if (i != move.heap_index && state[i] == move.new_size) return MoveRule::positive_duplicate;
  }
  if (move.new_size > current) return MoveRule::growth;
  return std::nullopt;
}

std::vector<Move> legal_moves(const RawState& state) {
  std::vector<Move> moves;
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (HeapSize v = 0; v < state[i]; ++v) {
      Move m{i, v};
      if (!check_move(state, m)) moves.push_back(m);
    }
  }
  return moves;
}

RawState apply_move(const RawState& state, const Move& move) {
  if (auto broken = check_move(state, move)) throw IllegalMove(*broken);
  std::vector<HeapSize> heaps(state.heaps().begin(), state.heaps().end());
  heaps[move.heap_index] = move.new_size;
  return RawState(std::move(heaps));
}

std::vector<CanonicalPosition> successors(const CanonicalPosition& pos) {
  std::vector<CanonicalPosition> out;
  for_each_successor(pos, [&](const CanonicalPosition& s) { out.push_back(s); });
  return out;
}

std::vector<CanonicalPosition> enumerate_positions(std::size_t max_heaps, HeapSize max_value) {
  std::vector<CanonicalPosition> out;
  std::vector<HeapSize> current;
  // Combinations of k distinct values from 1..max_value, for k = 0..max_heaps.
  for (std::size_t k = 0; k <= max_heaps && k <= max_value; ++k) {
    current.resize(k);
    for (std::size_t i = 0; i < k; ++i) current[i] = i + 1;
    while (true) {
      out.push_back(CanonicalPosition::from_sorted(current));
      std::size_t i = k;
      while (i > 0 && current[i - 1] == max_value - (k - i)) --i;
      if (i == 0) break;
      ++current[i - 1];
      for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace antonim
