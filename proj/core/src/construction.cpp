#include "modcanon/construction.hpp"

#include <stdexcept>

#include "modcanon/cover.hpp"

namespace modcanon {

namespace {

constexpr uint32_t kMaxOrder = 12;

void check_order(uint32_t k) {
  if (k < 1 || k > kMaxOrder) {
    throw std::invalid_argument("schedule order must be in [1, " +
                                std::to_string(kMaxOrder) + "]");
  }
}

uint64_t pow_u64(uint64_t base, uint32_t exp) {
  uint64_t acc = 1;
  for (uint32_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

} // namespace

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), bits_((rows * cols + 63) / 64, 0) {}

bool BitMatrix::get(size_t r, size_t c) const {
  const size_t i = index(r, c);
  return (bits_[i / 64] >> (i % 64)) & 1u;
}

void BitMatrix::set(size_t r, size_t c, bool value) {
  const size_t i = index(r, c);
  if (value) {
    bits_[i / 64] |= uint64_t{1} << (i % 64);
  } else {
    bits_[i / 64] &= ~(uint64_t{1} << (i % 64));
  }
}

Word BitMatrix::row_word(size_t r) const {
  Word out(cols_, 0);
  for (size_t c = 0; c < cols_; ++c) out[c] = get(r, c) ? 1 : 0;
  return out;
}

RhythmicPattern pow2_tile(uint32_t k) {
  check_order(k);
  return RhythmicPattern({0, 1, static_cast<int64_t>(1) << k});
}

BitMatrix entry_schedule(uint32_t k) {
  check_order(k);
  BitMatrix current(1, 2);
  current.set(0, 0, true); // level 1: row "10"

  for (uint32_t level = 1; level < k; ++level) {
    const size_t rows = current.rows();  // 2^level - 1
    const size_t cols = current.cols();  // 2^level
    BitMatrix next(2 * rows + 1, 2 * cols);

    // Top block: two side-by-side copies.
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) {
        const bool bit = current.get(r, c);
        next.set(r, c, bit);
        next.set(r, cols + c, bit);
      }
    }
    // Pivot row: zeros then 1, then ones with a final zero.
    next.set(rows, cols - 1, true);
    for (size_t c = 0; c < cols - 1; ++c) next.set(rows, cols + c, true);
    // Bottom block: copy with the null last column turned on, then ones.
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols - 1; ++c) {
        next.set(rows + 1 + r, c, current.get(r, c));
      }
      next.set(rows + 1 + r, cols - 1, true);
      for (size_t c = 0; c < cols - 1; ++c) next.set(rows + 1 + r, cols + c, true);
    }
    current = std::move(next);
  }
  return current;
}

RhythmicPattern schedule_entries(uint32_t k) {
  const BitMatrix t = entry_schedule(k);
  std::vector<int64_t> onsets;
  for (size_t r = 0; r < t.rows(); ++r) {
    for (size_t c = 0; c < t.cols(); ++c) {
      if (t.get(r, c)) onsets.push_back(static_cast<int64_t>(r * t.cols() + c));
    }
  }
  return RhythmicPattern(std::move(onsets));
}

ScheduleCounts predicted_counts(uint32_t k) {
  if (k == 0) throw std::invalid_argument("schedule order must be >= 1");
  const uint64_t four = pow_u64(4, k);
  const uint64_t three = pow_u64(3, k);
  return ScheduleCounts{four - 1, four - three, four - (3 * three - 1) / 2};
}

bool schedule_matches_greedy(uint32_t k) {
  check_order(k);
  const BitMatrix t = entry_schedule(k);
  const RhythmicPattern tile = pow2_tile(k);
  const PrimeModulus two(2);

  const auto outcome = greedy_tile(tile, two, predicted_counts(k).n);
  if (outcome.status != GreedyStatus::compact_tiling) return false;
  if (outcome.entries_pattern() != schedule_entries(k)) return false;

  // The greedy entry word, row by row, must form the fill chain starting
  // from the all-zero cover.
  Word previous(t.cols(), 0);
  for (size_t r = 0; r < t.rows(); ++r) {
    const auto filled = fill(tile, UnderCover{0, previous, two});
    if (!filled || filled->word != t.row_word(r)) return false;
    previous = t.row_word(r);
  }
  return true;
}

} // namespace modcanon
