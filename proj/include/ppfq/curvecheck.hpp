#pragma once

#include <cstdint>
#include <optional>

#include "ppfq/bounds.hpp"
#include "ppfq/factor.hpp"

namespace ppfq {

inline constexpr std::uint64_t kPointCountLimit = 8192;

struct PointCountReport {
  std::uint64_t count = 0;
  WeilInterval interval;
  /// Absent when the input is reducible over F_q.
  std::optional<AbsIrredVerdict> abs_irred;
  bool irreducible = false;
  /// Empty means not applicable: the curve is not absolutely irreducible.
  std::optional<bool> within;
};

std::uint64_t count_points(const BiPoly& phi, unsigned workers = 1);
PointCountReport verify_weil(const BiPoly& phi, unsigned workers = 1);

}  // namespace ppfq
