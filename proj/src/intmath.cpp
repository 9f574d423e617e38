#include "ppfq/intmath.hpp"

namespace ppfq {

std::uint64_t isqrt(u128 n) {
  if (n == 0) return 0;
  // Newton iteration from an over-estimate; converges monotonically down.
  u128 x = n;
  u128 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return static_cast<std::uint64_t>(x);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power_root(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto ps = prime_factors(n);
  if (ps.size() != 1) return std::nullopt;
  unsigned r = 0;
  for (std::uint64_t m = n; m > 1; m /= ps[0]) ++r;
  return std::pair{ps[0], r};
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  u128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace ppfq
