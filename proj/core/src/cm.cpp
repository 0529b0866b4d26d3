#include "modcanon/cm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "modcanon/fp_poly.hpp"
#include "modcanon/numbers.hpp"

namespace modcanon {

namespace {

// Totients below `bound`, sieved once and grown on demand.
std::vector<uint64_t> totient_table(uint64_t bound) {
  std::vector<uint64_t> table(bound + 1);
  for (uint64_t i = 0; i <= bound; ++i) table[i] = i;
  for (uint64_t p = 2; p <= bound; ++p) {
    if (table[p] != p) continue; // not prime
    for (uint64_t m = p; m <= bound; m += p) table[m] -= table[m] / p;
  }
  return table;
}

uint64_t cached_totient(uint64_t d) {
  static std::mutex mutex;
  static std::vector<uint64_t> table;
  std::lock_guard lock(mutex);
  if (d >= table.size()) table = totient_table(std::max<uint64_t>(2 * d, 4096));
  return table[d];
}

// Prime powers p^a with Phi_{p^a} | A(X). Only totient(p^a) <= deg(A) can
// divide, which keeps the candidate list short.
std::vector<uint64_t> prime_power_divisors(const RhythmicPattern& a) {
  const IntPoly poly = pattern_to_int_poly(a);
  const uint64_t deg = static_cast<uint64_t>(a.max());
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p <= deg + 1; ++p) {
    if (!is_prime(p)) continue;
    for (uint64_t pe = p; (pe / p) * (p - 1) <= deg; pe *= p) {
      if (int_divides(cyclotomic(static_cast<uint32_t>(pe)), poly)) {
        out.push_back(pe);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool t1_from_prime_powers(const RhythmicPattern& a,
                          const std::vector<uint64_t>& prime_powers) {
  uint64_t product = 1;
  for (uint64_t pe : prime_powers) product *= factorize(pe)[0].first;
  return product == a.size();
}

bool t2_from_prime_powers(const RhythmicPattern& a,
                          const std::vector<uint64_t>& prime_powers,
                          uint64_t search_bound) {
  std::map<uint64_t, std::vector<uint64_t>> groups;
  for (uint64_t pe : prime_powers) groups[factorize(pe)[0].first].push_back(pe);
  std::vector<std::vector<uint64_t>> pools;
  for (auto& [prime, powers] : groups) pools.push_back(std::move(powers));

  const IntPoly poly = pattern_to_int_poly(a);
  const uint64_t deg = static_cast<uint64_t>(a.max());

  const std::function<bool(size_t, uint64_t, size_t)> ok =
      [&](size_t pool, uint64_t product, size_t chosen) -> bool {
    if (pool == pools.size()) {
      if (chosen < 2) return true;
      if (totient(product) > deg) return false;
      return int_divides(cyclotomic(static_cast<uint32_t>(product)), poly);
    }
    if (!ok(pool + 1, product, chosen)) return false; // skip this prime
    for (uint64_t pe : pools[pool]) {
      // A product past the search bound cannot be a divisor index.
      if (product > search_bound / pe) return false;
      if (!ok(pool + 1, product * pe, chosen + 1)) return false;
    }
    return true;
  };
  return ok(0, 1, 0);
}

} // namespace

bool CyclotomicProfile::contains(uint64_t d) const {
  return std::binary_search(divisors.begin(), divisors.end(), d);
}

CyclotomicProfile cyclotomic_profile(const RhythmicPattern& a) {
  const IntPoly poly = pattern_to_int_poly(a);
  const uint64_t deg = static_cast<uint64_t>(a.max());
  CyclotomicProfile profile;
  profile.search_bound = 2 * deg * deg + 1;

  for (uint64_t d = 1; d <= profile.search_bound; ++d) {
    if (cached_totient(d) > deg) continue; // degree rules the division out
    if (!int_divides(cyclotomic(static_cast<uint32_t>(d)), poly)) continue;
    profile.divisors.push_back(d);
    if (factorize(d).size() == 1) profile.prime_powers.push_back(d);
  }
  return profile;
}

bool check_t1(const RhythmicPattern& a) {
  return t1_from_prime_powers(a, prime_power_divisors(a));
}

bool check_t1(const RhythmicPattern& a, const CyclotomicProfile& profile) {
  return t1_from_prime_powers(a, profile.prime_powers);
}

bool check_t2(const RhythmicPattern& a) {
  const uint64_t deg = static_cast<uint64_t>(a.max());
  return t2_from_prime_powers(a, prime_power_divisors(a), 2 * deg * deg + 1);
}

bool check_t2(const RhythmicPattern& a, const CyclotomicProfile& profile) {
  return t2_from_prime_powers(a, profile.prime_powers, profile.search_bound);
}

} // namespace modcanon
