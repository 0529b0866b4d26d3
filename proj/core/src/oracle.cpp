#include "modcanon/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace modcanon {

namespace {

constexpr uint32_t kMaxCensusOrder = 40;

// All exact complements of the reduced tile in Z_n, branching on the first
// uncovered position. Each candidate entry covers |tile| distinct positions,
// so every complement is found exactly once. Stops early after `limit`
// complements when limit > 0.
std::vector<std::vector<int64_t>> exact_complements(
    const std::vector<int64_t>& tile_mod_n, uint32_t n, size_t limit) {
  std::vector<uint64_t> cover_mask(n, 0);
  for (uint32_t b = 0; b < n; ++b) {
    uint64_t mask = 0;
    for (int64_t a : tile_mod_n) {
      mask |= uint64_t{1} << ((static_cast<uint64_t>(a) + b) % n);
    }
    cover_mask[b] = mask;
  }
  const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

  std::vector<std::vector<int64_t>> results;
  std::vector<int64_t> entries{0};
  const std::function<void(uint64_t)> dfs = [&](uint64_t covered) {
    if (limit > 0 && results.size() >= limit) return;
    if (covered == full) {
      results.push_back(entries);
      return;
    }
    uint32_t t = 0;
    while ((covered >> t) & 1u) ++t;
    // Candidates covering t, in increasing order.
    std::vector<uint32_t> candidates;
    for (int64_t a : tile_mod_n) {
      candidates.push_back((t + n - static_cast<uint32_t>(a) % n) % n);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (uint32_t b : candidates) {
      if ((cover_mask[b] & covered) != 0) continue;
      entries.push_back(b);
      dfs(covered | cover_mask[b]);
      entries.pop_back();
    }
  };
  dfs(cover_mask[0]);
  return results;
}

// Tile reduced mod n; nullopt when elements collide.
std::optional<std::vector<int64_t>> reduce_tile(const RhythmicPattern& tile,
                                                uint32_t n) {
  std::vector<int64_t> reduced;
  reduced.reserve(tile.size());
  for (int64_t a : tile.onsets()) reduced.push_back(a % n);
  std::sort(reduced.begin(), reduced.end());
  if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end()) {
    return std::nullopt;
  }
  return reduced;
}

} // namespace

BruteResult brute_minimal_complement(const RhythmicPattern& tile, PrimeModulus p,
                                     const SearchBudget& budget) {
  const uint32_t pv = p.value();
  const int64_t max_a = tile.max();
  BruteResult out;

  if (static_cast<uint64_t>(max_a) + 1 > budget.max_n) {
    out.diagnostic = "tile alone already exceeds max_n";
    return out;
  }

  Word word(static_cast<size_t>(max_a) + 1, 0);
  const auto place = [&](int64_t at) {
    const size_t need = static_cast<size_t>(at + max_a) + 1;
    if (word.size() < need) word.resize(need, 0);
    for (int64_t a : tile.onsets()) {
      const size_t t = static_cast<size_t>(at + a);
      word[t] = (word[t] + 1) % pv;
    }
    out.entries.push_back(at);
  };

  place(0);
  size_t scan = 0;
  while (true) {
    if (++out.nodes > budget.node_limit) {
      out.diagnostic = "node limit exhausted";
      return out;
    }
    while (scan < word.size() && word[scan] == 1) ++scan;
    if (scan == word.size()) {
      out.status = BruteStatus::found;
      out.n = static_cast<uint64_t>(out.entries.back() + max_a) + 1;
      return out;
    }
    // The defect index is the only viable next entry: a smaller entry would
    // leave a frozen defect behind it, a larger one can never reach back.
    const int64_t m = static_cast<int64_t>(scan);
    if ((word[scan] + 1) % pv != 1) {
      out.status = BruteStatus::infeasible;
      out.diagnostic = "defect at index " + std::to_string(m) +
                       " cannot be repaired by a set of entries";
      return out;
    }
    if (out.entries.size() + 1 > budget.max_entries) {
      out.diagnostic = "entry limit exhausted";
      return out;
    }
    if (static_cast<uint64_t>(m + max_a) + 1 > budget.max_n) {
      out.diagnostic = "size limit exhausted";
      return out;
    }
    place(m);
  }
}

std::vector<std::pair<RhythmicPattern, RhythmicPattern>> brute_all_tilings(
    uint32_t n) {
  if (n == 0 || n > kMaxCensusOrder) {
    throw std::invalid_argument("census order must be in [1, " +
                                std::to_string(kMaxCensusOrder) + "]");
  }

  std::vector<std::pair<RhythmicPattern, RhythmicPattern>> pairs;
  for (uint32_t size_a = 1; size_a * size_a <= n; ++size_a) {
    if (n % size_a != 0) continue;
    const uint32_t size_b = n / size_a;

    // Every A of size size_a containing 0, in lexicographic order.
    std::vector<int64_t> chosen{0};
    const std::function<void(uint32_t)> enumerate = [&](uint32_t next) {
      if (chosen.size() == size_a) {
        for (auto& entries : exact_complements(chosen, n, 0)) {
          std::sort(entries.begin(), entries.end());
          if (size_a == size_b && entries < chosen) continue; // unordered pair
          pairs.emplace_back(RhythmicPattern(chosen),
                             RhythmicPattern(std::move(entries)));
        }
        return;
      }
      for (uint32_t v = next; v < n; ++v) {
        chosen.push_back(v);
        enumerate(v + 1);
        chosen.pop_back();
      }
    };
    enumerate(1);
  }
  return pairs;
}

std::optional<RhythmicPattern> find_exact_complement(const RhythmicPattern& tile,
                                                     uint32_t n) {
  if (n == 0 || n > kMaxCensusOrder) {
    throw std::invalid_argument("census order must be in [1, " +
                                std::to_string(kMaxCensusOrder) + "]");
  }
  if (n % tile.size() != 0) return std::nullopt;
  const auto reduced = reduce_tile(tile, n);
  if (!reduced) return std::nullopt;
  auto results = exact_complements(*reduced, n, 1);
  if (results.empty()) return std::nullopt;
  return RhythmicPattern(std::move(results.front()));
}

} // namespace modcanon
