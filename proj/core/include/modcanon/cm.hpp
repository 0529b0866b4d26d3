#pragma once

#include <cstdint>
#include <vector>

#include "modcanon/pattern.hpp"

namespace modcanon {

// Indices of cyclotomic divisors of A(X). `divisors` is every d up to
// search_bound with Phi_d | A(X); `prime_powers` is its prime-power subset.
struct CyclotomicProfile {
  std::vector<uint64_t> divisors;
  std::vector<uint64_t> prime_powers;
  uint64_t search_bound;

  bool contains(uint64_t d) const;
};

// Searches d <= 2*deg(A)^2 + 1; beyond that bound totient(d) exceeds deg(A),
// so no further divisor is possible.
CyclotomicProfile cyclotomic_profile(const RhythmicPattern& a);

// |A| equals the product of the base primes of the prime-power divisors,
// one factor per prime power.
bool check_t1(const RhythmicPattern& a);
bool check_t1(const RhythmicPattern& a, const CyclotomicProfile& profile);

// Every product of prime powers from the profile with pairwise-distinct base
// primes is itself a cyclotomic divisor index of A(X).
bool check_t2(const RhythmicPattern& a);
bool check_t2(const RhythmicPattern& a, const CyclotomicProfile& profile);

} // namespace modcanon
