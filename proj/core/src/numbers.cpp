#include "modcanon/numbers.hpp"

namespace modcanon {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, uint32_t>> factors;
  for (uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d != 0) continue;
    uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

uint64_t totient(uint64_t n) {
  uint64_t result = n;
  for (const auto& [p, e] : factorize(n)) {
    result -= result / p;
  }
  return result;
}

} // namespace modcanon
