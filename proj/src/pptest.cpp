#include "ppfq/pptest.hpp"

#include <vector>

#include "ppfq/intmath.hpp"

namespace ppfq {

namespace {

Elem value(const Field& F, const std::vector<Elem>& coeffs, std::uint64_t a) {
  Elem acc = F.zero();
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = F.add(F.mul(acc, Elem{a}), coeffs[k]);
  return acc;
}

// A permutation is confirmed after exactly q evaluations. Otherwise the
// witness is the lexicographically smallest pair (a, b), a < b, f(a) = f(b),
// which takes two more passes over bitsets rather than per-value tables.
PPVerdict scan(const Field& F, const std::vector<Elem>& coeffs) {
  PPVerdict out;
  out.scanned_q = F.q();
  std::vector<bool> seen(F.q(), false), repeated(F.q(), false);
  bool any = false;
  for (std::uint64_t a = 0; a < F.q(); ++a) {
    const std::uint64_t v = value(F, coeffs, a).v;
    if (seen[v]) {
      repeated[v] = true;
      any = true;
    }
    seen[v] = true;
  }
  out.evaluations_used = F.q();
  if (!any) {
    out.is_pp = true;
    return out;
  }
  std::uint64_t a = 0;
  Elem va;
  for (;; ++a) {
    ++out.evaluations_used;
    va = value(F, coeffs, a);
    if (repeated[va.v]) break;
  }
  for (std::uint64_t b = a + 1; b < F.q(); ++b) {
    ++out.evaluations_used;
    if (value(F, coeffs, b) == va) {
      out.collision = std::pair{Elem{a}, Elem{b}};
      break;
    }
  }
  return out;
}

}  // namespace

PPVerdict is_pp(const UniPoly& f) {
  const Field& F = f.field();
  if (F.q() > kEnumerationLimit)
    fail(ErrorKind::FieldTooLarge, F.describe() + " exceeds the enumeration limit 2^20");
  return scan(F, f.coeffs());
}

PPVerdict is_pp_over_extension(const UniPoly& f, unsigned m) {
  const Field& F = f.field();
  if (m == 0) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  auto total = checked_pow(F.q(), m);
  if (!total || *total > kExtensionScanLimit)
    fail(ErrorKind::ExtensionTooLarge, "q^m exceeds 2^30 for q = " + std::to_string(F.q()) + ", m = " + std::to_string(m));
  if (m == 1) return scan(F, f.coeffs());
  Field E = F.extension(m);
  const UniPoly g = map_coeffs(f, embed(F, E));
  return scan(E, g.coeffs());
}

ValueCensus value_census(const UniPoly& f) {
  const Field& F = f.field();
  if (F.q() > kEnumerationLimit)
    fail(ErrorKind::FieldTooLarge, F.describe() + " exceeds the enumeration limit 2^20");
  std::vector<std::uint64_t> mult(F.q(), 0);
  for (std::uint64_t a = 0; a < F.q(); ++a) ++mult[eval(f, Elem{a}).v];
  ValueCensus out;
  std::uint64_t squares = 0;
  for (std::uint64_t v = 0; v < F.q(); ++v) {
    if (!mult[v]) continue;
    out.counts[v] = mult[v];
    squares += mult[v] * mult[v];
  }
  out.off_diagonal = squares - F.q();
  return out;
}

}  // namespace ppfq
