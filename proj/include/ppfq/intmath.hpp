#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ppfq {

using u128 = unsigned __int128;
using i128 = __int128;

// floor(sqrt(n)), exact.
std::uint64_t isqrt(u128 n);

bool is_prime(std::uint64_t n);

// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// (p, r) with n = p^r, r >= 1, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_root(std::uint64_t n);

// base^exp, or nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

}  // namespace ppfq
