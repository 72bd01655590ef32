#include "antonim/solver.hpp"

#include "antonim/kernels.hpp"

namespace antonim {

ExclusionSet::ExclusionSet(std::size_t capacity)
    : bits_(capacity + 1), words_((capacity + 1 + 63) / 64, 0) {}

void ExclusionSet::insert(HeapSize value) noexcept {
  if (value >= bits_) return;
  words_[value / 64] |= std::uint64_t{1} << (value % 64);
}

bool ExclusionSet::contains(HeapSize value) const noexcept {
  if (value >= bits_) return false;
  return (words_[value / 64] >> (value % 64)) & 1u;
}

HeapSize ExclusionSet::mex() const {
  // Bits past bits_ in the last word are never set, so the scan stops there.
  return kernels::active().first_zero_bit(words_);
}

CanonicalPosition checked_given(std::vector<HeapSize> given) {
  try {
    return CanonicalPosition::from_sorted(std::move(given));
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

HeapSize completion(const CanonicalPosition& given, CompletionCache& cache) {
  if (auto hit = cache.find(given)) return *hit;

  // One entry per given heap plus one per reachable reduction.
  ExclusionSet excluded(given.size() + given.total());
  for (HeapSize v : given.values()) excluded.insert(v);
  // Reductions lower the total chip count, so this recursion terminates.
  for_each_successor(given, [&](const CanonicalPosition& reduced) {
    excluded.insert(completion(reduced, cache));
  });
  return cache.insert(given, excluded.mex());
}

Classification classify(const CanonicalPosition& pos, CompletionCache& cache) {
  if (pos.empty()) return Classification::P;
  const std::size_t top = pos.size() - 1;
  return completion(pos.without_index(top), cache) == pos.max() ? Classification::P
                                                               : Classification::N;
}

std::optional<Move> best_move(const RawState& state, CompletionCache& cache) {
  if (classify(canonicalize(state), cache) == Classification::P) return std::nullopt;
  for (const Move& m : legal_moves(state)) {
    if (classify(canonicalize(apply_move(state, m)), cache) == Classification::P) return m;
  }
  // Unreachable: every N-position has a move to a P-position.
  throw std::logic_error("no winning move from N-position " + state.to_string());
}

Classification nim_classify(const NimState& s) {
  return kernels::active().xor_reduce(s.heaps) == 0 ? Classification::P : Classification::N;
}

Theorem2Report theorem2_check(HeapSize max_value, CompletionCache& cache) {
  if (max_value < 1) throw InvalidInput("theorem2 sweep needs max_value >= 1");

  Theorem2Report report;
  report.max_value = max_value;

  std::vector<HeapSize> x1s, x2s, zs;
  for (HeapSize x2 = 1; x2 <= max_value; ++x2) {
    for (HeapSize x1 = 0; x1 < x2; ++x1) {
      const HeapSize z = completion(CanonicalPosition::from_heaps({x1, x2}), cache);
      const int zeros = (x1 == 0) + (z == 0);
      if (zeros > 1) continue;
      x1s.push_back(x1);
      x2s.push_back(x2);
      zs.push_back(z);
    }
  }
  report.pairs_checked = x1s.size();

  // Shift every heap by one chip and test all triples for xor == 0 at once.
  std::vector<HeapSize> a(x1s.size()), b(x1s.size()), c(x1s.size());
  for (std::size_t i = 0; i < x1s.size(); ++i) {
    a[i] = x1s[i] + 1;
    b[i] = x2s[i] + 1;
    c[i] = zs[i] + 1;
  }
  std::vector<std::uint8_t> bad(x1s.size());
  if (kernels::active().xor3_nonzero(a, b, c, bad) != 0) {
    for (std::size_t i = 0; i < bad.size(); ++i)
      if (bad[i]) report.mismatches.push_back({x1s[i], x2s[i], zs[i]});
  }

  report.counterexample_nim_p = nim_classify({{1, 2, 5, 6}}) == Classification::P;
  report.counterexample_antonim_n =
      classify(CanonicalPosition::from_heaps({0, 1, 4, 5}), cache) == Classification::N;
  return report;
}

}  // namespace antonim
