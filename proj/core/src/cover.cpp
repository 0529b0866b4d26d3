#include "modcanon/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcanon {

namespace {

// Word of (tile + entries) mod p over [0, maxTile + maxEntry], plus the first
// defect index m (first value != 1, possibly one past the end) and the last
// onset index M (-1 when empty).
struct ContextWord {
  Word word;
  int64_t first_defect;
  int64_t last_onset;
};

ContextWord context_word(const RhythmicPattern& tile,
                         std::span<const int64_t> entries, PrimeModulus p) {
  int64_t extent = 0;
  for (int64_t b : entries) extent = std::max(extent, b);
  ContextWord out{Word(entries.empty() ? 1 : static_cast<size_t>(extent + tile.max()) + 1, 0),
                  0, -1};
  const uint32_t pv = p.value();
  for (int64_t b : entries) {
    for (int64_t a : tile.onsets()) {
      const size_t t = static_cast<size_t>(a + b);
      out.word[t] = (out.word[t] + 1) % pv;
    }
  }
  for (size_t t = 0; t < out.word.size(); ++t) {
    if (out.word[t] != 0) out.last_onset = static_cast<int64_t>(t);
  }
  int64_t m = 0;
  while (m < static_cast<int64_t>(out.word.size()) && out.word[m] == 1) ++m;
  out.first_defect = m;
  return out;
}

} // namespace

Word UnderCover::trimmed() const {
  Word out = word;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool operator==(const UnderCover& a, const UnderCover& b) {
  return a.start == b.start && a.modulus == b.modulus && a.trimmed() == b.trimmed();
}

UnderCover extract_under_cover(const RhythmicPattern& tile,
                               const RhythmicPattern& entries, PrimeModulus p,
                               int64_t start, size_t length) {
  const auto ctx = context_word(tile, entries.onsets(), p);
  if (start < 0 || start > ctx.first_defect) {
    throw std::invalid_argument(
        "under-cover must start at the first defect or back up over ones only");
  }
  if (start + static_cast<int64_t>(length) < ctx.last_onset + 1) {
    throw std::invalid_argument("under-cover too short to reach the last onset");
  }
  Word slice(length, 0);
  for (size_t i = 0; i < length; ++i) {
    const size_t t = static_cast<size_t>(start) + i;
    if (t < ctx.word.size()) slice[i] = ctx.word[t];
  }
  return UnderCover{start, std::move(slice), p};
}

std::optional<FillResult> fill(const RhythmicPattern& tile, const UnderCover& uc) {
  const uint32_t p = uc.modulus.value();
  Word window = uc.word;
  const size_t n = window.size();
  FillResult result;
  result.word.assign(n, 0);

  size_t j = 0;
  while (j < n) {
    if (window[j] == 1) {
      ++j;
      continue;
    }
    if (result.word[j] != 0) return std::nullopt; // already placed here
    result.word[j] = 1;
    result.offsets.push_back(static_cast<int64_t>(j));
    for (int64_t a : tile.onsets()) {
      const size_t t = j + static_cast<size_t>(a);
      if (t < n) window[t] = (window[t] + 1) % p;
    }
  }
  return result;
}

UnderCover following_under_cover(const RhythmicPattern& tile,
                                 std::span<const int64_t> base_entries,
                                 const UnderCover& uc,
                                 std::span<const int64_t> fill_offsets,
                                 std::optional<size_t> length) {
  std::vector<int64_t> entries(base_entries.begin(), base_entries.end());
  for (int64_t offset : fill_offsets) entries.push_back(uc.start + offset);
  const auto ctx = context_word(tile, entries, uc.modulus);

  // The fill must leave the cover window all ones.
  for (size_t i = 0; i < uc.word.size(); ++i) {
    const size_t t = static_cast<size_t>(uc.start) + i;
    const uint32_t value = t < ctx.word.size() ? ctx.word[t] : 0;
    if (value != 1) {
      throw std::invalid_argument("offsets do not fill the under-cover");
    }
  }

  const int64_t start = uc.start + static_cast<int64_t>(uc.word.size());
  const size_t len =
      length.value_or(static_cast<size_t>(std::max<int64_t>(ctx.last_onset - start + 1, 0)));
  Word slice(len, 0);
  for (size_t i = 0; i < len; ++i) {
    const size_t t = static_cast<size_t>(start) + i;
    if (t < ctx.word.size()) slice[i] = ctx.word[t];
  }
  return UnderCover{start, std::move(slice), uc.modulus};
}

UnderCover following_under_cover(const RhythmicPattern& tile,
                                 const RhythmicPattern& base_entries,
                                 const UnderCover& uc,
                                 std::span<const int64_t> fill_offsets,
                                 std::optional<size_t> length) {
  return following_under_cover(tile, base_entries.onsets(), uc, fill_offsets, length);
}

RhythmicPattern GreedyOutcome::entries_pattern() const {
  std::vector<int64_t> sorted(entries.begin(), entries.end());
  return RhythmicPattern(std::move(sorted));
}

GreedyOutcome greedy_tile(const RhythmicPattern& tile, PrimeModulus p,
                          uint64_t max_n) {
  const uint32_t pv = p.value();
  const int64_t max_a = tile.max();
  GreedyOutcome out;

  if (static_cast<uint64_t>(max_a) + 1 > max_n) {
    out.reason = StuckReason::size_limit;
    out.diagnostic = "tile alone already exceeds max_n";
    return out;
  }

  // Word of (tile + entries) mod p over [0, maxEntry + maxA]; in_entries
  // marks used indices.
  Word word(static_cast<size_t>(max_a) + 1, 0);
  std::vector<uint8_t> in_entries(word.size(), 0);
  int64_t max_entry = 0;

  const auto place = [&](int64_t at) {
    const size_t need = static_cast<size_t>(at + max_a) + 1;
    if (word.size() < need) {
      word.resize(need, 0);
      in_entries.resize(need, 0);
    }
    for (int64_t a : tile.onsets()) {
      const size_t t = static_cast<size_t>(at + a);
      word[t] = (word[t] + 1) % pv;
    }
    out.entries.push_back(at);
    in_entries[static_cast<size_t>(at)] = 1;
    max_entry = std::max(max_entry, at);
  };

  place(0);
  size_t scan = 0;
  while (true) {
    while (scan < word.size() && word[scan] == 1) ++scan;
    if (scan == word.size()) {
      out.status = GreedyStatus::compact_tiling;
      out.n = static_cast<uint64_t>(max_entry + max_a) + 1;
      return out;
    }
    const int64_t i = static_cast<int64_t>(scan);
    if (i == max_entry + max_a + 1) {
      // Unreachable while the all-ones check runs first; kept as stated.
      out.break_fired = true;
      out.reason = StuckReason::break_line;
      out.diagnostic = "first defect one past the word end";
      return out;
    }
    if (in_entries[scan]) {
      out.reason = StuckReason::defect_unrepairable;
      out.diagnostic = "defect at index " + std::to_string(i) +
                       " persists after placing the tile there";
      return out;
    }
    if (static_cast<uint64_t>(i + max_a) + 1 > max_n) {
      out.reason = StuckReason::size_limit;
      out.diagnostic = "canon would exceed max_n = " + std::to_string(max_n);
      return out;
    }
    place(i);
  }
}

std::optional<uint64_t> noncompact_size(const RhythmicPattern& tile,
                                        PrimeModulus p, uint64_t max_n) {
  return order_of_divisor(pattern_to_poly(tile, p), max_n);
}

std::vector<int64_t> lift_to_pattern(const FpPoly& q, uint64_t n) {
  if (n == 0) throw std::invalid_argument("period must be >= 1");
  std::vector<int64_t> onsets;
  const auto coeffs = q.coeffs();
  // Within each residue class mod n, excess at a slot carries one period up
  // until every slot holds 0 or 1. A polynomial of degree < n has one slot
  // per class, so its coefficients spread to k, k+n, ..., k+(a-1)n directly.
  for (uint64_t r = 0; r < n && r < coeffs.size(); ++r) {
    uint64_t carry = 0;
    for (uint64_t e = r; e < coeffs.size() || carry > 0; e += n) {
      const uint64_t total = carry + (e < coeffs.size() ? coeffs[e] : 0);
      if (total > 0) onsets.push_back(static_cast<int64_t>(e));
      carry = total > 0 ? total - 1 : 0;
    }
  }
  std::sort(onsets.begin(), onsets.end());
  return onsets;
}

std::optional<LiftedCanon> noncompact_canon(const RhythmicPattern& tile,
                                            PrimeModulus p, uint64_t max_n) {
  const FpPoly tile_poly = pattern_to_poly(tile, p);
  const FpPoly shifted = poly_mul(tile_poly, FpPoly::x_pow_minus_one(p, 1));
  const auto n = order_of_divisor(shifted, max_n);
  if (!n) return std::nullopt;

  auto [quotient, remainder] = poly_divrem(FpPoly::x_pow_minus_one(p, *n), shifted);
  if (!remainder.is_zero()) {
    throw std::logic_error("order-finding produced a non-divisor");
  }
  RhythmicPattern entries(lift_to_pattern(quotient, *n));
  return LiftedCanon{std::move(entries), *n, std::move(quotient)};
}

} // namespace modcanon
