#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "ppfq/polyring.hpp"

namespace ppfq {

inline constexpr std::uint64_t kExtensionScanLimit = std::uint64_t{1} << 30;

struct PPVerdict {
  bool is_pp = false;
  /// Lexicographically smallest pair a < b with f(a) = f(b), as elements of
  /// the field that was scanned.
  std::optional<std::pair<Elem, Elem>> collision;
  std::uint64_t evaluations_used = 0;
  /// Order of the field that was scanned.
  std::uint64_t scanned_q = 0;
};

struct ValueCensus {
  std::map<std::uint64_t, std::uint64_t> counts;
  /// sum of squared multiplicities minus q: zeros of f(x) - f(y) off the diagonal.
  std::uint64_t off_diagonal = 0;
  bool all_distinct() const { return off_diagonal == 0; }
};

PPVerdict is_pp(const UniPoly& f);
PPVerdict is_pp_over_extension(const UniPoly& f, unsigned m);
ValueCensus value_census(const UniPoly& f);

}  // namespace ppfq
