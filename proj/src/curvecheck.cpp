#include "ppfq/curvecheck.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace ppfq {

namespace {

std::uint64_t count_rows(const BiPoly& phi, std::uint64_t begin, std::uint64_t end) {
  const Field& F = phi.field();
  std::uint64_t n = 0;
  for (std::uint64_t b = begin; b < end; ++b) {
    UniPoly row = specialize_y(phi, Elem{b});
    if (row.is_zero()) {
      n += F.q();
      continue;
    }
    for (std::uint64_t a = 0; a < F.q(); ++a)
      if (eval(row, Elem{a}) == F.zero()) ++n;
  }
  return n;
}

}  // namespace

std::uint64_t count_points(const BiPoly& phi, unsigned workers) {
  const Field& F = phi.field();
  if (F.q() > kPointCountLimit)
    fail(ErrorKind::FieldTooLarge, F.describe() + " exceeds the point-count limit 8192");
  const std::uint64_t q = F.q();
  workers = std::clamp<unsigned>(workers, 1, 64);
  if (workers == 1) return count_rows(phi, 0, q);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] { partial[w] = count_rows(phi, q * w / workers, q * (w + 1) / workers); });
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

PointCountReport verify_weil(const BiPoly& phi, unsigned workers) {
  if (phi.is_zero()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial vanishes everywhere");
  if (phi.is_constant()) fail(ErrorKind::ConstantInput, "a constant defines no curve");
  if (*phi.total_degree() > kBivariateDegreeGuard)
    fail(ErrorKind::DegreeGuardExceeded, "curve degree exceeds 64");
  PointCountReport out;
  out.count = count_points(phi, workers);
  out.interval = weil_interval(static_cast<std::int64_t>(*phi.total_degree()), static_cast<std::int64_t>(phi.field().q()));
  auto fac = factor_bi(phi);
  out.irreducible = fac.factors.size() == 1 && fac.factors[0].second == 1;
  if (out.irreducible) {
    out.abs_irred = is_absolutely_irreducible(fac.factors[0].first);
    if (out.abs_irred->absolutely_irreducible) {
      const auto c = static_cast<std::int64_t>(out.count);
      out.within = out.interval.lo <= c && c <= out.interval.hi;
    }
  }
  return out;
}

}  // namespace ppfq
