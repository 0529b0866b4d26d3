#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modcanon/fp_poly.hpp"
#include "modcanon/pattern.hpp"

namespace modcanon {

// Slice of the characteristic word of A+B around its first defect; a partial
// covering awaiting repair. Trailing zeros do not distinguish under-covers,
// so equality compares trimmed words.
struct UnderCover {
  int64_t start;
  Word word;
  PrimeModulus modulus;

  Word trimmed() const;
  friend bool operator==(const UnderCover& a, const UnderCover& b);
};

// Word of (A+B) mod p sliced at [start, start+length). `start` may back up
// from the first defect over leading ones only, and the slice must reach the
// last onset.
UnderCover extract_under_cover(const RhythmicPattern& tile,
                               const RhythmicPattern& entries, PrimeModulus p,
                               int64_t start, size_t length);

// Entries that repair a cover to all-ones, found left to right: one translate
// of the tile is placed at each defect. `offsets` are relative to the cover
// start; `word` is the same set padded to the cover length.
struct FillResult {
  std::vector<int64_t> offsets;
  Word word;
};

// nullopt when a defect persists at an offset that already received a
// translate (possible only for p > 2).
std::optional<FillResult> fill(const RhythmicPattern& tile, const UnderCover& uc);

// Under-cover of (tile, base ∪ (fill+start)) beginning right after `uc`. The
// default length runs through the last onset of the new configuration.
UnderCover following_under_cover(const RhythmicPattern& tile,
                                 std::span<const int64_t> base_entries,
                                 const UnderCover& uc,
                                 std::span<const int64_t> fill_offsets,
                                 std::optional<size_t> length = std::nullopt);
UnderCover following_under_cover(const RhythmicPattern& tile,
                                 const RhythmicPattern& base_entries,
                                 const UnderCover& uc,
                                 std::span<const int64_t> fill_offsets,
                                 std::optional<size_t> length = std::nullopt);

enum class GreedyStatus { compact_tiling, stuck };
enum class StuckReason { none, defect_unrepairable, size_limit, break_line };

struct GreedyOutcome {
  GreedyStatus status = GreedyStatus::stuck;
  std::vector<int64_t> entries; // in insertion order
  uint64_t n = 0;               // valid on compact_tiling
  StuckReason reason = StuckReason::none;
  std::string diagnostic;
  bool break_fired = false;

  RhythmicPattern entries_pattern() const;
};

// Repeatedly adds the tile at the first index whose multiplicity is not
// 1 mod p, until the word is all ones. Stops when a defect cannot be
// repaired (index already used) or the canon would exceed max_n.
GreedyOutcome greedy_tile(const RhythmicPattern& tile, PrimeModulus p,
                          uint64_t max_n);

// Smallest n <= max_n with A(X) | X^n - 1 mod p; a multiple of the smallest
// canon size for the tile.
std::optional<uint64_t> noncompact_size(const RhythmicPattern& tile,
                                        PrimeModulus p, uint64_t max_n);

// Rewrites a*X^k as (a-1)*X^k + X^{k+n} until every coefficient is 0 or 1;
// the result is congruent to q mod (X^n - 1, p). Returned as sorted onsets.
std::vector<int64_t> lift_to_pattern(const FpPoly& q, uint64_t n);

// Non-compact canon from order-finding on A(X)(X-1) plus lifting of the
// cofactor; used when the greedy tiler reports stuck.
struct LiftedCanon {
  RhythmicPattern entries;
  uint64_t n;
  FpPoly quotient;
};
std::optional<LiftedCanon> noncompact_canon(const RhythmicPattern& tile,
                                            PrimeModulus p, uint64_t max_n);

} // namespace modcanon
