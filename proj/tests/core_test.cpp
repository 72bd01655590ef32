#include "antonim/core.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace antonim {
namespace {

TEST(ValidateState, AcceptsDistinctPositivesAndRepeatedZeros) {
  EXPECT_NO_THROW(validate_state({0, 1, 4, 5}));
  EXPECT_NO_THROW(validate_state({0, 0, 0}));
  EXPECT_NO_THROW(validate_state({7}));
}

TEST(ValidateState, RejectsDuplicatePositive) {
  try {
    validate_state({1, 1, 3});
    FAIL() << "expected DuplicatePositiveHeap";
  } catch (const DuplicatePositiveHeap& e) {
    EXPECT_EQ(e.value(), 1u);
    EXPECT_STREQ(e.what(), "duplicate positive heap: 1");
  }
}

TEST(ValidateState, RejectsEmptyList) { EXPECT_THROW(validate_state({}), EmptyState); }

TEST(Canonicalize, SortsAndDropsZeros) {
  EXPECT_EQ(canonicalize(validate_state({5, 0, 1, 3})), CanonicalPosition::from_heaps({1, 3, 5}));
  EXPECT_TRUE(canonicalize(validate_state({0, 0, 0})).empty());
  EXPECT_EQ(canonicalize(validate_state({2})).values().size(), 1u);
  EXPECT_EQ(canonicalize(validate_state({2})).max(), 2u);
}

TEST(CanonicalPosition, FromSortedRejectsBadInput) {
  EXPECT_THROW(CanonicalPosition::from_sorted({2, 1}), std::invalid_argument);
  EXPECT_THROW(CanonicalPosition::from_sorted({0, 1}), std::invalid_argument);
  EXPECT_THROW(CanonicalPosition::from_sorted({3, 3}), std::invalid_argument);
  EXPECT_NO_THROW(CanonicalPosition::from_sorted({}));
}

TEST(CanonicalPosition, ReplacedKeepsOrder) {
  const auto p = CanonicalPosition::from_heaps({2, 5, 9});
  EXPECT_EQ(p.replaced(2, 3), CanonicalPosition::from_heaps({2, 3, 5}));
  EXPECT_EQ(p.replaced(2, 1), CanonicalPosition::from_heaps({1, 2, 5}));
  EXPECT_EQ(p.replaced(1, 0), CanonicalPosition::from_heaps({2, 9}));
  EXPECT_EQ(p.replaced(0, 1), CanonicalPosition::from_heaps({1, 5, 9}));
  EXPECT_EQ(p.with(4), CanonicalPosition::from_heaps({2, 4, 5, 9}));
  EXPECT_EQ(p.with(0), p);
  EXPECT_EQ(p.without_index(0), CanonicalPosition::from_heaps({5, 9}));
}

TEST(LegalMoves, Examples) {
  EXPECT_EQ(legal_moves(validate_state({0, 1})), (std::vector<Move>{{1, 0}}));
  // (1,1) would duplicate the other heap.
  EXPECT_EQ(legal_moves(validate_state({1, 2})), (std::vector<Move>{{0, 0}, {1, 0}}));
  EXPECT_TRUE(legal_moves(validate_state({0, 0, 0})).empty());
}

TEST(ApplyMove, Examples) {
  EXPECT_EQ(apply_move(validate_state({0, 1, 4, 5}), {2, 3}), validate_state({0, 1, 3, 5}));
  EXPECT_EQ(apply_move(validate_state({3, 5}), {0, 0}), validate_state({0, 5}));
}

TEST(ApplyMove, NamesTheViolatedRule) {
  const auto s = validate_state({3, 5});
  auto rule_of = [&](Move m) -> std::optional<MoveRule> {
    try {
      apply_move(s, m);
    } catch (const IllegalMove& e) {
      return e.rule();
    }
    return std::nullopt;
  };
  EXPECT_EQ(rule_of({0, 5}), MoveRule::positive_duplicate);
  EXPECT_EQ(rule_of({0, 3}), MoveRule::no_chips_taken);
  EXPECT_EQ(rule_of({0, 4}), MoveRule::growth);
  EXPECT_EQ(rule_of({2, 0}), MoveRule::heap_index_out_of_range);
  EXPECT_EQ(rule_of({1, 4}), std::nullopt);
}

TEST(ApplyMove, EmptyingOntoAnotherZeroIsLegal) {
  EXPECT_EQ(apply_move(validate_state({0, 2}), {1, 0}), validate_state({0, 0}));
}

// Random valid raw states with up to `max_heaps` heaps of size <= max_value.
RawState random_state(std::mt19937_64& rng, std::size_t max_heaps, HeapSize max_value) {
  std::uniform_int_distribution<std::size_t> count(1, max_heaps);
  std::uniform_int_distribution<HeapSize> value(0, max_value);
  while (true) {
    std::vector<HeapSize> h(count(rng));
    for (auto& v : h) v = value(rng);
    try {
      return validate_state(h);
    } catch (const DuplicatePositiveHeap&) {
    }
  }
}

TEST(CoreProperties, MovesStayValidAndShrinkTotal) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const RawState s = random_state(rng, 5, 12);
    const auto moves = legal_moves(s);
    EXPECT_EQ(moves.empty(), canonicalize(s).empty()) << s.to_string();
    for (const Move& m : moves) {
      const RawState next = apply_move(s, m);
      EXPECT_NO_THROW(validate_state({next.heaps().begin(), next.heaps().end()}));
      EXPECT_LT(next.total(), s.total());
    }
  }
}

TEST(CoreProperties, CanonicalizeIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = canonicalize(random_state(rng, 6, 20));
    EXPECT_EQ(CanonicalPosition::from_heaps(c.values()), c);
  }
}

// Canonical successors of a raw state do not depend on heap order, and match
// the successors computed on the canonical form directly.
TEST(CoreProperties, SuccessorsIgnoreHeapOrder) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const RawState s = random_state(rng, 5, 10);
    std::vector<HeapSize> shuffled(s.heaps().begin(), s.heaps().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const RawState t = validate_state(shuffled);

    auto canonical_successors = [](const RawState& r) {
      std::vector<CanonicalPosition> out;
      for (const Move& m : legal_moves(r)) out.push_back(canonicalize(apply_move(r, m)));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    auto direct = successors(canonicalize(s));
    std::sort(direct.begin(), direct.end());
    EXPECT_EQ(canonical_successors(s), canonical_successors(t));
    EXPECT_EQ(canonical_successors(s), direct);
  }
}

TEST(EnumeratePositions, CountsMatchBinomials) {
  // C(10,0..4) = 1, 10, 45, 120, 210.
  EXPECT_EQ(enumerate_positions(4, 10).size(), 386u);
  EXPECT_EQ(enumerate_positions(1, 5).size(), 6u);
  EXPECT_EQ(enumerate_positions(5, 3).size(), 8u);
  const auto all = enumerate_positions(3, 6);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }));
}

}  // namespace
}  // namespace antonim
