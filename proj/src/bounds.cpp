#include "ppfq/bounds.hpp"

#include "ppfq/error.hpp"
#include "ppfq/intmath.hpp"

namespace ppfq {

namespace {

void require_degree(std::int64_t n) {
  if (n < 4) fail(ErrorKind::DegreeTooSmall, "degree " + std::to_string(n) + " is below 4");
  if (n > kMaxBoundDegree) fail(ErrorKind::InvalidArgument, "degree " + std::to_string(n) + " is above 10000");
}

void require_q(std::int64_t q) {
  if (q < 1) fail(ErrorKind::InvalidArgument, "q must be positive");
  if (q > (std::int64_t{1} << 62)) fail(ErrorKind::InvalidArgument, "q is too large");
}

}  // namespace

std::string audit_reason_name(AuditReason r) {
  switch (r) {
    case AuditReason::NotPrimePower: return "not_prime_power";
    case AuditReason::InequalityFails: return "inequality_fails";
    case AuditReason::HoldsAtEquality: return "holds_at_equality";
    case AuditReason::HoldsStrictly: return "holds_strictly";
  }
  return "unknown";
}

std::int64_t floor_2sqrt(std::int64_t q) {
  require_q(q);
  return static_cast<std::int64_t>(isqrt(static_cast<u128>(4) * static_cast<u128>(q)));
}

WeilInterval weil_interval(std::int64_t d, std::int64_t q) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "curve degree must be at least 1");
  if (d > kMaxBoundDegree) fail(ErrorKind::InvalidArgument, "curve degree is above 10000");
  if (q < 2 || !is_prime_power(q)) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  const std::int64_t err = (d - 1) * (d - 2) / 2 * floor_2sqrt(q);
  return {q + 1 - err - d, q + 1 + err, d, q};
}

InequalityEval corollary_inequality(std::int64_t d, std::int64_t q) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "curve degree must be at least 1");
  if (d > kMaxBoundDegree) fail(ErrorKind::InvalidArgument, "curve degree is above 10000");
  return {q + 1, (d - 1) * (d - 2) / 2 * floor_2sqrt(q) + 2 * d};
}

bool corollary_holds(std::int64_t d, std::int64_t q) { return corollary_inequality(d, q).holds(); }

InequalityEval theorem_inequality(std::int64_t n, std::int64_t q) {
  require_degree(n);
  return corollary_inequality(n - 1, q);
}

bool theorem_holds(std::int64_t n, std::int64_t q) { return theorem_inequality(n, q).holds(); }

std::int64_t quadratic_root_square_floor(std::int64_t a, std::int64_t disc) {
  // ((A + sqrt D)/2)^2 = (A^2 + D + 2A sqrt D)/4 and 2A sqrt D = sqrt(4 A^2 D).
  const u128 a2 = static_cast<u128>(a) * static_cast<u128>(a);
  const u128 root = isqrt(4 * a2 * static_cast<u128>(disc));
  return static_cast<std::int64_t>((a2 + static_cast<u128>(disc) + root) / 4);
}

std::int64_t corollary_discriminant(std::int64_t d) {
  const std::int64_t a = (d - 1) * (d - 2);
  return a * a + 8 * d - 4;
}

std::int64_t misprinted_discriminant(std::int64_t d) { return d * d + 5 * d - 2; }

std::int64_t corollary_closed_form(std::int64_t d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "curve degree must be at least 1");
  if (d > kMaxBoundDegree) fail(ErrorKind::InvalidArgument, "curve degree is above 10000");
  return quadratic_root_square_floor((d - 1) * (d - 2), corollary_discriminant(d));
}

std::int64_t closed_form_bound(std::int64_t n) {
  require_degree(n);
  const std::int64_t a = (n - 2) * (n - 3);
  return quadratic_root_square_floor(a, a * a + 8 * n - 12);
}

std::int64_t cg_bound(std::int64_t n) {
  require_degree(n);
  const std::int64_t a = (n - 2) * (n - 3);
  return quadratic_root_square_floor(a, a * a + 2 * (n * n - 1));
}

std::int64_t vzg_bound(std::int64_t n) {
  require_degree(n);
  return n * n * n * n;
}

std::vector<BoundRow> comparison_table(std::int64_t n_min, std::int64_t n_max) {
  require_degree(n_min);
  require_degree(n_max);
  if (n_min > n_max) fail(ErrorKind::InvalidArgument, "n_min exceeds n_max");
  std::vector<BoundRow> rows;
  for (std::int64_t n = n_min; n <= n_max; ++n) rows.push_back({n, vzg_bound(n), cg_bound(n), closed_form_bound(n)});
  return rows;
}

AdmissibleResult max_admissible_prime_power(std::int64_t n) {
  require_degree(n);
  AdmissibleResult out;
  out.n = n;
  out.closed_form = closed_form_bound(n);
  for (std::int64_t q = out.closed_form; q >= 2 && !out.q_max_strict; --q) {
    AuditEntry e{q, AuditReason::NotPrimePower, std::nullopt};
    if (is_prime_power(q)) {
      auto ineq = theorem_inequality(n, q);
      e.inequality = ineq;
      if (!ineq.holds()) {
        e.reason = AuditReason::InequalityFails;
      } else {
        e.reason = ineq.holds_strictly() ? AuditReason::HoldsStrictly : AuditReason::HoldsAtEquality;
        if (!out.q_max) out.q_max = q;
        if (ineq.holds_strictly()) out.q_max_strict = q;
      }
    }
    out.audit.push_back(e);
  }
  if (out.q_max && out.q_max_strict && *out.q_max != *out.q_max_strict) {
    out.note = "q = " + std::to_string(*out.q_max) + " satisfies the non-strict inequality only at equality";
    for (const auto& e : out.audit)
      if (e.q == *out.q_max && e.inequality)
        out.note += " (" + std::to_string(e.inequality->lhs) + " <= " + std::to_string(e.inequality->rhs) + ")";
    out.note += "; reading it strictly, as the conclusion that it fails there does, gives q = " +
                std::to_string(*out.q_max_strict);
  }
  return out;
}

bool is_prime_power(std::int64_t q) {
  return q >= 2 && prime_power_root(static_cast<std::uint64_t>(q)).has_value();
}

std::int64_t prev_prime_power(std::int64_t x) {
  if (x <= 2) fail(ErrorKind::InvalidArgument, "no prime power below " + std::to_string(x));
  for (std::int64_t q = x - 1;; --q)
    if (is_prime_power(q)) return q;
}

PrimePowerInfo prime_power_utils(std::int64_t q) {
  PrimePowerInfo out;
  out.is_prime_power = is_prime_power(q);
  if (q > 2) out.prev_prime_power = prev_prime_power(q);
  return out;
}

}  // namespace ppfq
