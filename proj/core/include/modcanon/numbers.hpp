#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace modcanon {

bool is_prime(uint64_t n);

// Prime factorization by trial division, sorted by prime.
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n);

uint64_t totient(uint64_t n);

} // namespace modcanon
