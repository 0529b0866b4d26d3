#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modcanon/pattern.hpp"

namespace modcanon {

struct SearchBudget {
  uint64_t max_n = 1 << 16;
  uint64_t max_entries = 1 << 16;
  uint64_t node_limit = 50'000'000;
};

enum class BruteStatus {
  found,            // minimal compact complement within budget
  infeasible,       // proven: no compact complement exists for this tile
  budget_exhausted, // undecided within the budget
};

struct BruteResult {
  BruteStatus status = BruteStatus::budget_exhausted;
  std::vector<int64_t> entries;
  uint64_t n = 0;
  uint64_t nodes = 0;
  std::string diagnostic;

  RhythmicPattern entries_pattern() const {
    return RhythmicPattern(std::vector<int64_t>(entries.begin(), entries.end()));
  }
};

// Depth-first search for the smallest compact mod-p complement, trying entry
// positions in increasing order. Any valid complement must repair the first
// defect index, which prunes every other candidate; the first complete word
// found is therefore the minimum, lexicographically first.
BruteResult brute_minimal_complement(const RhythmicPattern& tile, PrimeModulus p,
                                     const SearchBudget& budget = {});

// Every unordered pair {A, B} with 0 in both, A, B inside [0, n), and
// A (+)_n B = Z_n exactly. Pairs are emitted with |A| <= |B| (ties broken
// lexicographically) in deterministic order. n <= 40.
std::vector<std::pair<RhythmicPattern, RhythmicPattern>> brute_all_tilings(uint32_t n);

// First exact complement of the tile in Z_n found by the census search, if
// any. The tile is reduced mod n; a collision means no complement.
std::optional<RhythmicPattern> find_exact_complement(const RhythmicPattern& tile,
                                                     uint32_t n);

} // namespace modcanon
