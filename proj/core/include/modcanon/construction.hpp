#pragma once

#include <cstdint>
#include <vector>

#include "modcanon/pattern.hpp"

namespace modcanon {

// Bit matrix, row-major, bit-packed.
class BitMatrix {
public:
  BitMatrix(size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool get(size_t r, size_t c) const;
  void set(size_t r, size_t c, bool value);
  Word row_word(size_t r) const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const BitMatrix& a, const BitMatrix& b) {
    return !(a == b);
  }

private:
  size_t index(size_t r, size_t c) const { return r * cols_ + c; }

  size_t rows_;
  size_t cols_;
  std::vector<uint64_t> bits_;
};

// The tile {0, 1, 2^k}.
RhythmicPattern pow2_tile(uint32_t k);

// Recursive (2^k - 1) x 2^k array of mod-2 entry rows for pow2_tile(k). Each
// row read as entries fills the previous row read as an under-cover; the last
// column is always zero. 1 <= k <= 12.
BitMatrix entry_schedule(uint32_t k);

// Positions of the ones of entry_schedule(k) in row-major order.
RhythmicPattern schedule_entries(uint32_t k);

// Closed-form canon sizes for pow2_tile(k): period 4^k - 1, 4^k - 3^k
// entries, 4^k - (3^{k+1} - 1)/2 donset positions.
struct ScheduleCounts {
  uint64_t n;
  uint64_t entries;
  uint64_t donsets;
};
ScheduleCounts predicted_counts(uint32_t k);

// True iff the greedy tiler on pow2_tile(k) returns exactly the scheduled
// entries and its entry word, sliced into rows, forms the fill chain
// row_i -> row_{i+1} starting from the all-zero row.
bool schedule_matches_greedy(uint32_t k);

} // namespace modcanon
