#include <doctest.h>

#include <array>
#include <random>
#include <set>
#include <span>
#include <stdexcept>

#include "modcanon/construction.hpp"
#include "modcanon/cover.hpp"

using namespace modcanon;

namespace {

const PrimeModulus kTwo(2);

UnderCover cover_at(int64_t start, const char* digits, uint32_t p = 2) {
  return UnderCover{start, word_from_string(digits), PrimeModulus(p)};
}

} // namespace

TEST_SUITE("cover") {

TEST_CASE("under-cover extraction") {
  const auto uc3 = extract_under_cover(RhythmicPattern({0, 1, 3}),
                                       RhythmicPattern({0, 1, 4}), PrimeModulus(3),
                                       1, 7);
  CHECK(uc3.start == 1);
  CHECK(word_to_string(uc3.word) == "2112101");

  const auto uc2 = extract_under_cover(RhythmicPattern({0, 1, 4}),
                                       RhythmicPattern({0, 2, 5}), kTwo, 6, 4);
  CHECK(word_to_string(uc2.word) == "0001");

  // Padding with trailing zeros does not change the under-cover.
  const auto padded = extract_under_cover(RhythmicPattern({0, 1, 4}),
                                          RhythmicPattern({0, 2, 5}), kTwo, 6, 6);
  CHECK(word_to_string(padded.word) == "000100");
  CHECK(padded == uc2);

  // A tiling gives the all-ones-then-zeros shape from any admissible start.
  const auto tiled = extract_under_cover(RhythmicPattern({0, 1, 4}),
                                         RhythmicPattern({0, 2, 5, 6, 8, 9, 10}),
                                         kTwo, 0, 20);
  CHECK(word_to_string(tiled.word) == "11111111111111100000");

  // Backing up is allowed over leading ones only, and the slice must reach
  // the last onset.
  CHECK_THROWS_AS(extract_under_cover(RhythmicPattern({0, 1, 4}),
                                      RhythmicPattern({0, 2, 5}), kTwo, 7, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_under_cover(RhythmicPattern({0, 1, 4}),
                                      RhythmicPattern({0, 2, 5}), kTwo, 6, 3),
                  std::invalid_argument);
}

TEST_CASE("filling an under-cover") {
  const RhythmicPattern tile({0, 1, 4});

  const auto filled = fill(tile, cover_at(6, "0001"));
  REQUIRE(filled);
  CHECK(filled->offsets == std::vector<int64_t>{0, 2, 3});
  CHECK(word_to_string(filled->word) == "1011");

  // A longer slice of the same context needs one more entry.
  const auto longer = fill(tile, cover_at(6, "000100"));
  REQUIRE(longer);
  CHECK(longer->offsets == std::vector<int64_t>{0, 2, 3, 4});

  // Null covers of even length are filled by alternating entries.
  for (uint32_t k = 1; k <= 6; ++k) {
    const RhythmicPattern ak = pow2_tile(k);
    for (size_t n = 1; 2 * n <= (size_t{1} << k); ++n) {
      const auto res = fill(ak, UnderCover{0, Word(2 * n, 0), kTwo});
      REQUIRE(res);
      Word expected;
      for (size_t i = 0; i < n; ++i) {
        expected.push_back(1);
        expected.push_back(0);
      }
      CHECK(res->word == expected);
    }
  }
}

TEST_CASE("following under-cover") {
  const RhythmicPattern tile({0, 1, 4});
  const RhythmicPattern base({0, 2, 5});
  const auto uc = cover_at(6, "0001");
  const auto next = following_under_cover(tile, base, uc, std::array<int64_t, 3>{0, 2, 3});
  CHECK(next.start == 10);
  CHECK(word_to_string(next.word) == "0011");

  // Filling the null cover with {0,2} echoes the entries one block later.
  const auto echoed = following_under_cover(
      pow2_tile(2), std::span<const int64_t>{}, UnderCover{0, Word(4, 0), kTwo},
      std::array<int64_t, 2>{0, 2}, 4);
  CHECK(echoed.start == 4);
  CHECK(word_to_string(echoed.word) == "1010");

  // After a complete tiling the following under-cover is empty.
  const auto empty = following_under_cover(
      RhythmicPattern({0, 1}), std::span<const int64_t>{},
      UnderCover{0, Word(4, 0), kTwo}, std::array<int64_t, 2>{0, 2});
  CHECK(empty.start == 4);
  CHECK(empty.word.empty());

  CHECK_THROWS_AS(following_under_cover(tile, base, uc, std::array<int64_t, 1>{1}),
                  std::invalid_argument);
}

TEST_CASE("greedy tiler on worked tiles") {
  const auto small = greedy_tile(RhythmicPattern({0, 1, 4}), kTwo, 1 << 16);
  REQUIRE(small.status == GreedyStatus::compact_tiling);
  CHECK(small.entries == std::vector<int64_t>{0, 2, 5, 6, 8, 9, 10});
  CHECK(small.n == 15);
  CHECK_FALSE(small.break_fired);

  const auto trivial = greedy_tile(RhythmicPattern({0}), kTwo, 16);
  REQUIRE(trivial.status == GreedyStatus::compact_tiling);
  CHECK(trivial.entries == std::vector<int64_t>{0});
  CHECK(trivial.n == 1);

  const auto doubled = greedy_tile(RhythmicPattern({0, 1, 2, 6, 7, 8}), kTwo, 1 << 16);
  REQUIRE(doubled.status == GreedyStatus::compact_tiling);
  CHECK(doubled.entries == std::vector<int64_t>{0, 3});
  CHECK(doubled.n == 12);
}

TEST_CASE("greedy stuck reporting") {
  const auto stuck = greedy_tile(RhythmicPattern({0, 1, 3}), PrimeModulus(3), 1 << 12);
  CHECK(stuck.status == GreedyStatus::stuck);
  CHECK(stuck.reason == StuckReason::defect_unrepairable);

  const auto capped = greedy_tile(RhythmicPattern({0, 1, 4}), kTwo, 10);
  CHECK(capped.status == GreedyStatus::stuck);
  CHECK(capped.reason == StuckReason::size_limit);
}

TEST_CASE("first defect only moves right") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<int64_t> onsets{0};
    const size_t count = 2 + rng() % 3;
    while (onsets.size() < count) onsets.insert(1 + static_cast<int64_t>(rng() % 10));
    const RhythmicPattern tile(std::vector<int64_t>(onsets.begin(), onsets.end()));
    const auto outcome = greedy_tile(tile, kTwo, 1 << 18);
    REQUIRE(outcome.status == GreedyStatus::compact_tiling);
    CHECK(std::is_sorted(outcome.entries.begin(), outcome.entries.end()));
    CHECK(std::adjacent_find(outcome.entries.begin(), outcome.entries.end()) ==
          outcome.entries.end());
  }
}

TEST_CASE("greedy equals the iterated fill chain") {
  // Rebuilding the canon by repeatedly extracting the under-cover at the
  // first defect and filling it must reproduce the tiler's entries.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<int64_t> onsets{0};
    const size_t count = 2 + rng() % 3;
    while (onsets.size() < count) onsets.insert(1 + rng() % 10);
    const RhythmicPattern tile(std::vector<int64_t>(onsets.begin(), onsets.end()));
    const auto greedy = greedy_tile(tile, kTwo, 1 << 18);
    REQUIRE(greedy.status == GreedyStatus::compact_tiling);

    std::vector<int64_t> entries{0};
    while (true) {
      int64_t extent = 0;
      for (int64_t b : entries) extent = std::max(extent, b);
      Word word(static_cast<size_t>(extent + tile.max()) + 1, 0);
      for (int64_t b : entries) {
        for (int64_t a : tile.onsets()) word[static_cast<size_t>(a + b)] ^= 1u;
      }
      size_t m = 0;
      while (m < word.size() && word[m] == 1) ++m;
      if (m == word.size()) break; // all ones
      int64_t last = -1;
      for (size_t t = 0; t < word.size(); ++t) {
        if (word[t]) last = static_cast<int64_t>(t);
      }
      const RhythmicPattern base(std::vector<int64_t>(entries.begin(), entries.end()));
      const auto uc = extract_under_cover(tile, base, kTwo, static_cast<int64_t>(m),
                                          static_cast<size_t>(last - m) + 1);
      const auto filled = fill(tile, uc);
      REQUIRE(filled);
      for (int64_t offset : filled->offsets) {
        entries.push_back(static_cast<int64_t>(m) + offset);
      }
      std::sort(entries.begin(), entries.end());
    }
    auto expected = greedy.entries;
    std::sort(expected.begin(), expected.end());
    CHECK(entries == expected);
  }
}

TEST_CASE("non-compact sizes") {
  CHECK(noncompact_size(RhythmicPattern({0, 1, 3}), kTwo, 100) == 7);
  CHECK(noncompact_size(RhythmicPattern({0, 1}), kTwo, 100) == 1);
  CHECK(noncompact_size(RhythmicPattern({0, 1, 2}), kTwo, 100) == 3);
  CHECK(noncompact_size(RhythmicPattern({0, 1, 3}), kTwo, 6) == std::nullopt);
}

TEST_CASE("lifting a quotient to onsets") {
  const PrimeModulus three(3);

  // Already 0/1: unchanged.
  const FpPoly flat(three, {1, 0, 1, 1});
  CHECK(lift_to_pattern(flat, 5) == std::vector<int64_t>{0, 2, 3});

  // A doubled coefficient spreads one period up.
  CHECK(lift_to_pattern(FpPoly(three, {2}), 3) == std::vector<int64_t>{0, 3});

  // Lifting never changes the class mod (X^n - 1, p).
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const uint32_t p = std::array{2u, 3u, 5u}[rng() % 3];
    const PrimeModulus pm(p);
    std::vector<uint32_t> coeffs(1 + rng() % 12);
    for (auto& c : coeffs) c = rng() % p;
    const FpPoly q(pm, std::move(coeffs));
    const uint64_t n = 1 + rng() % 10;
    std::vector<uint32_t> lifted_coeffs;
    for (int64_t onset : lift_to_pattern(q, n)) {
      if (lifted_coeffs.size() <= static_cast<size_t>(onset)) {
        lifted_coeffs.resize(onset + 1, 0);
      }
      lifted_coeffs[onset] = 1;
    }
    const FpPoly lifted(pm, std::move(lifted_coeffs));
    CHECK(poly_mod_cyclic(lifted, n) == poly_mod_cyclic(q, n));
    for (uint32_t c : lifted.coeffs()) CHECK(c <= 1);
  }
}

TEST_CASE("non-compact canon from order-finding") {
  const auto canon = noncompact_canon(RhythmicPattern({0, 1, 3}), PrimeModulus(3),
                                      1 << 12);
  REQUIRE(canon);
  CHECK(canon->n == 24);
  CHECK(canon->entries ==
        RhythmicPattern({0,  2,  3,  4,  5,  6,  7,  8,  9,  10, 13, 14,
                         15, 17, 19, 20, 27, 28, 32, 34, 37, 38, 39, 41}));
  CHECK(is_tiling(RhythmicPattern({0, 1, 3}), canon->entries, 24, Modulus::prime(3)));
  CHECK_FALSE(is_compact(RhythmicPattern({0, 1, 3}), canon->entries,
                         Modulus::prime(3)) == std::optional<uint64_t>{24});
}

} // TEST_SUITE
