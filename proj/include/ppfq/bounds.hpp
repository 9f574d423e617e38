#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppfq {

inline constexpr std::int64_t kMaxBoundDegree = 10000;

struct WeilInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t d = 0;
  std::int64_t q = 0;
};

// q + 1 <= (d-1)(d-2) floor(2 sqrt q) / 2 + 2d, with both sides kept.
struct InequalityEval {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs <= rhs; }
  bool holds_strictly() const { return lhs < rhs; }
};

struct BoundRow {
  std::int64_t n = 0;
  std::int64_t vzg = 0;
  std::int64_t cg = 0;
  std::int64_t this_paper = 0;
};

enum class AuditReason { NotPrimePower, InequalityFails, HoldsAtEquality, HoldsStrictly };
std::string audit_reason_name(AuditReason r);

struct AuditEntry {
  std::int64_t q = 0;
  AuditReason reason = AuditReason::NotPrimePower;
  std::optional<InequalityEval> inequality;
};

struct AdmissibleResult {
  std::int64_t n = 0;
  std::int64_t closed_form = 0;
  /// Largest prime power satisfying the non-strict inequality.
  std::optional<std::int64_t> q_max;
  /// Largest prime power satisfying it strictly.
  std::optional<std::int64_t> q_max_strict;
  std::vector<AuditEntry> audit;
  std::string note;
};

struct PrimePowerInfo {
  bool is_prime_power = false;
  std::optional<std::int64_t> prev_prime_power;
};

std::int64_t floor_2sqrt(std::int64_t q);
WeilInterval weil_interval(std::int64_t d, std::int64_t q);
InequalityEval corollary_inequality(std::int64_t d, std::int64_t q);
bool corollary_holds(std::int64_t d, std::int64_t q);
InequalityEval theorem_inequality(std::int64_t n, std::int64_t q);
bool theorem_holds(std::int64_t n, std::int64_t q);

/// floor(((A + sqrt(D)) / 2)^2) in exact integers.
std::int64_t quadratic_root_square_floor(std::int64_t a, std::int64_t disc);
std::int64_t corollary_discriminant(std::int64_t d);
std::int64_t misprinted_discriminant(std::int64_t d);
std::int64_t corollary_closed_form(std::int64_t d);
std::int64_t closed_form_bound(std::int64_t n);
std::int64_t cg_bound(std::int64_t n);
std::int64_t vzg_bound(std::int64_t n);
std::vector<BoundRow> comparison_table(std::int64_t n_min, std::int64_t n_max);

AdmissibleResult max_admissible_prime_power(std::int64_t n);

bool is_prime_power(std::int64_t q);
std::int64_t prev_prime_power(std::int64_t x);
PrimePowerInfo prime_power_utils(std::int64_t q);

}  // namespace ppfq
