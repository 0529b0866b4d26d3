#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modcanon/fp_poly.hpp"

namespace modcanon {

// Finite word over {0..p-1}; index is time.
using Word = std::vector<uint32_t>;

std::string word_to_string(const Word& w);
Word word_from_string(std::string_view digits);

// Finite set of non-negative onsets containing 0, kept strictly increasing.
class RhythmicPattern {
public:
  explicit RhythmicPattern(std::vector<int64_t> onsets);

  std::span<const int64_t> onsets() const { return onsets_; }
  size_t size() const { return onsets_.size(); }
  int64_t max() const { return onsets_.back(); }
  bool contains(int64_t t) const;
  std::string to_string() const;

  friend bool operator==(const RhythmicPattern& a, const RhythmicPattern& b) {
    return a.onsets_ == b.onsets_;
  }
  friend bool operator!=(const RhythmicPattern& a, const RhythmicPattern& b) {
    return !(a == b);
  }
  friend bool operator<(const RhythmicPattern& a, const RhythmicPattern& b) {
    return a.onsets_ < b.onsets_;
  }

private:
  std::vector<int64_t> onsets_;
};

// Parses "0,2,5" (or the content of a file when the argument is "@path").
RhythmicPattern parse_pattern(std::string_view text);

// Multiset of onset times; multiplicities are 32-bit.
class OnsetMultiset {
public:
  OnsetMultiset() = default;
  static OnsetMultiset from_times(std::vector<int64_t> times);
  static OnsetMultiset from_counts(std::vector<std::pair<int64_t, uint32_t>> counts);

  std::span<const std::pair<int64_t, uint32_t>> counts() const { return counts_; }
  uint32_t multiplicity(int64_t t) const;
  bool empty() const { return counts_.empty(); }
  size_t distinct_size() const { return counts_.size(); }
  uint64_t total_size() const;
  int64_t max_time() const; // -1 when empty
  std::string to_string() const;

  friend bool operator==(const OnsetMultiset& a, const OnsetMultiset& b) {
    return a.counts_ == b.counts_;
  }
  friend bool operator!=(const OnsetMultiset& a, const OnsetMultiset& b) {
    return !(a == b);
  }

private:
  std::vector<std::pair<int64_t, uint32_t>> counts_; // sorted by time
};

// Tiling modulus: either classical exact tiling or a prime p.
class Modulus {
public:
  static Modulus exact() { return Modulus(std::nullopt); }
  static Modulus prime(uint32_t p) { return Modulus(PrimeModulus(p)); }
  static Modulus prime(PrimeModulus p) { return Modulus(p); }

  bool is_exact() const { return !p_.has_value(); }
  PrimeModulus p() const;
  std::string to_string() const;

  friend bool operator==(const Modulus& a, const Modulus& b) {
    if (a.is_exact() != b.is_exact()) return false;
    return a.is_exact() || *a.p_ == *b.p_;
  }
  friend bool operator!=(const Modulus& a, const Modulus& b) { return !(a == b); }

private:
  explicit Modulus(std::optional<PrimeModulus> p) : p_(p) {}
  std::optional<PrimeModulus> p_;
};

FpPoly pattern_to_poly(const RhythmicPattern& a, PrimeModulus p);
IntPoly pattern_to_int_poly(const RhythmicPattern& a);

// 0/1 word of the pattern; length must be at least max(a)+1.
Word pattern_to_word(const RhythmicPattern& a, size_t length);

// A + B, reduced mod n when given.
OnsetMultiset multiset_sum(const RhythmicPattern& a, const RhythmicPattern& b,
                           std::optional<uint64_t> n = std::nullopt);

// Characteristic word of the multiset mod p; length must cover the last time.
Word char_word(const OnsetMultiset& c, PrimeModulus p, size_t length);

// Exact mode: every t in [0,n) has multiplicity exactly 1 in A +_n B.
// Mod-p mode: every multiplicity is congruent to 1 mod p.
bool is_tiling(const RhythmicPattern& a, const RhythmicPattern& b, uint64_t n,
               Modulus modulus);

// max(A)+max(B)+1 when the unreduced sum covers [0, maxA+maxB] with
// multiplicity 1 (respectively 1 mod p); nullopt otherwise.
std::optional<uint64_t> is_compact(const RhythmicPattern& a,
                                   const RhythmicPattern& b, Modulus modulus);

// A + {0, n, ..., (k-1)n}; throws when the direct sum collides.
RhythmicPattern concatenate(const RhythmicPattern& a, uint32_t k, uint64_t n);

// True iff some 0 < t < n translates A to itself mod n. Elements of A must
// stay distinct after reduction mod n.
bool is_periodic(const RhythmicPattern& a, uint64_t n);

// Requires is_tiling(a,b,n,modulus); the trivial canon of Z_1 is not Vuza.
bool is_vuza(const RhythmicPattern& a, const RhythmicPattern& b, uint64_t n,
             Modulus modulus);

struct AdmissibilityReport {
  bool admissible;
  std::vector<std::pair<uint64_t, uint32_t>> factors;
  std::string matched_form; // empty when admissible
};
AdmissibilityReport vuza_admissibility(uint64_t n);
bool vuza_admissible(uint64_t n);

// Times whose multiplicity exceeds a tiling's, with the excess over 1 as
// multiplicity. Requires is_tiling(a,b,n,modulus).
OnsetMultiset donsets(const RhythmicPattern& a, const RhythmicPattern& b,
                      uint64_t n, Modulus modulus);

// A verified canon with its derived facts.
struct CanonReport {
  RhythmicPattern tile;
  RhythmicPattern entries;
  uint64_t n;
  Modulus modulus;
  bool compact;
  OnsetMultiset donset_multiset;
  bool vuza;
};

CanonReport make_canon_report(const RhythmicPattern& tile,
                              const RhythmicPattern& entries, uint64_t n,
                              Modulus modulus);

} // namespace modcanon
