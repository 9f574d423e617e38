#include <algorithm>
#include <unordered_map>

#include "ppfq/factor.hpp"
#include "ppfq/intmath.hpp"

namespace ppfq {

namespace {

// Number of specialization points tried before moving to a shear or an
// extension field.
constexpr std::uint64_t kPointBudget = 4096;

UniPoly content_in_y(const BiPoly& phi) {
  UniPoly g(phi.field());
  for (const auto& c : phi.x_coeffs()) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

BiPoly divide_by_y_poly(const BiPoly& phi, const UniPoly& c) {
  std::vector<UniPoly> coeffs = phi.x_coeffs();
  for (auto& a : coeffs) a = a / c;
  return BiPoly::from_x_coeffs(phi.field(), coeffs);
}

BiPoly primitive_part(const BiPoly& phi) {
  if (phi.is_zero()) return phi;
  return divide_by_y_poly(phi, content_in_y(phi));
}

UniPoly lc_x(const BiPoly& phi) { return phi.x_coeff(*phi.deg_x()); }

BiPoly x_power(const Field& F, std::size_t k) { return BiPoly::from_terms(F, {{k, 0, F.one()}}); }

// Pseudo-remainder of a by b as polynomials in x over F[y].
BiPoly prem(BiPoly a, const BiPoly& b) {
  const Field& F = a.field();
  const std::size_t db = *b.deg_x();
  const BiPoly lb = BiPoly::in_y(lc_x(b));
  while (!a.is_zero() && *a.deg_x() >= db) {
    const std::size_t k = *a.deg_x() - db;
    BiPoly la = BiPoly::in_y(lc_x(a));
    a = lb * a - la * b * x_power(F, k);
  }
  return a;
}

BiPoly exact_quotient(const BiPoly& a, const BiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(ErrorKind::InvalidArgument, "internal: inexact bivariate division");
  return *q;
}

// Squarefree decomposition of a normalized polynomial without pure-y factors.
std::vector<std::pair<BiPoly, unsigned>> squarefree_bi(const BiPoly& phi) {
  std::vector<std::pair<BiPoly, unsigned>> out;
  if (phi.is_constant()) return out;
  const unsigned p = static_cast<unsigned>(std::min<std::uint64_t>(phi.field().p(), 1u << 30));
  BiPoly c = gcd(gcd(phi, derivative_x(phi)), derivative_y(phi));
  BiPoly w = exact_quotient(phi, c);
  unsigned i = 1;
  while (!w.is_constant()) {
    BiPoly y = gcd(w, c);
    BiPoly z = exact_quotient(w, y);
    if (!z.is_constant()) out.emplace_back(z.normalized(), i);
    ++i;
    c = exact_quotient(c, y);
    w = std::move(y);
  }
  if (!c.is_constant()) {
    for (auto& [g, m] : squarefree_bi(pth_root(c.normalized()))) out.emplace_back(g, m * p);
  }
  return out;
}

UniPoly series_inverse(const UniPoly& l, std::size_t k) {
  const Field& F = l.field();
  std::vector<Elem> inv(k);
  const Elem l0_inv = F.inv(l.coeff(0));
  inv[0] = l0_inv;
  for (std::size_t n = 1; n < k; ++n) {
    Elem acc{};
    for (std::size_t i = 1; i <= n; ++i) acc = F.add(acc, F.mul(l.coeff(i), inv[n - i]));
    inv[n] = F.neg(F.mul(l0_inv, acc));
  }
  return UniPoly(F, std::move(inv));
}

BiPoly times_y_power(const UniPoly& in_x, std::size_t k) {
  std::vector<UniPoly> cols(k + 1, UniPoly(in_x.field()));
  cols[k] = in_x;
  return BiPoly::from_y_coeffs(in_x.field(), cols);
}

// Squarefree-ness of phi(x, c) with the x-degree preserved.
bool good_point(const BiPoly& phi, const UniPoly& lead, Elem c) {
  if (eval(lead, c).v == 0) return false;
  UniPoly u = specialize_y(phi, c);
  return gcd(u, derivative(u)).is_constant();
}

std::optional<Elem> find_good_point(const BiPoly& phi) {
  const Field& F = phi.field();
  const UniPoly lead = lc_x(phi);
  const std::uint64_t budget = std::min(F.q(), kPointBudget);
  for (std::uint64_t v = 0; v < budget; ++v)
    if (good_point(phi, lead, {v})) return Elem{v};
  return std::nullopt;
}

// Factors phi (squarefree, no pure-y factors, every factor separable in x)
// given a point c where phi(x, c) is squarefree of full x-degree.
std::vector<BiPoly> lift_and_recombine(const BiPoly& phi, Elem c) {
  const Field& F = phi.field();
  const BiPoly shifted = substitute_y_affine(phi, F.zero(), c);
  const UniPoly u = specialize_y(shifted, F.zero());
  const auto ufac = factor_uni(u);
  const std::size_t m = ufac.factors.size();
  if (m <= 1) return {phi.normalized()};

  std::vector<UniPoly> us;
  for (const auto& [g, mult] : ufac.factors) us.push_back(g);

  const std::size_t K = 2 * *shifted.deg_y() + 1;
  const UniPoly lead = lc_x(shifted);
  const BiPoly target = (shifted * BiPoly::in_y(series_inverse(lead, K))).truncated_y(K);

  // s_i * prod_{j != i} u_j = 1 mod u_i
  std::vector<UniPoly> s(m, UniPoly(F));
  for (std::size_t i = 0; i < m; ++i) {
    UniPoly v = UniPoly::constant(F, F.one());
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) v = (v * us[j]) % us[i];
    auto [g, si, ti] = ext_gcd(v, us[i]);
    s[i] = si % us[i];
  }

  std::vector<BiPoly> lifted;
  for (const auto& ui : us) lifted.push_back(BiPoly::in_x(ui));
  for (std::size_t k = 1; k < K; ++k) {
    BiPoly prod = BiPoly::constant(F, F.one());
    for (const auto& fi : lifted) prod = (prod * fi).truncated_y(k + 1);
    UniPoly err = (target - prod).y_coeff(k);
    if (err.is_zero()) continue;
    for (std::size_t i = 0; i < m; ++i) {
      UniPoly delta = (s[i] * err) % us[i];
      if (!delta.is_zero()) lifted[i] = lifted[i] + times_y_power(delta, k);
    }
  }

  std::vector<BiPoly> found;
  std::vector<std::size_t> remaining(m);
  for (std::size_t i = 0; i < m; ++i) remaining[i] = i;
  BiPoly current = shifted;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool hit = false;
    // Subsets of `remaining` of the given size, lexicographic by position.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      BiPoly cand = BiPoly::in_y(lc_x(current));
      for (auto pos : idx) cand = (cand * lifted[remaining[pos]]).truncated_y(K);
      cand = primitive_part(cand);
      if (auto quot = divide_exact(current, cand)) {
        found.push_back(cand);
        current = *quot;
        std::vector<std::size_t> rest;
        for (std::size_t pos = 0; pos < remaining.size(); ++pos)
          if (std::find(idx.begin(), idx.end(), pos) == idx.end()) rest.push_back(remaining[pos]);
        remaining = std::move(rest);
        hit = true;
        break;
      }
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && idx[i] == remaining.size() - size + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (!current.is_constant()) found.push_back(current);

  const Elem back = F.neg(c);
  for (auto& h : found) h = substitute_y_affine(h, F.zero(), back).normalized();
  return found;
}

BiPoly frobenius_coeffs(const BiPoly& phi, std::uint64_t power) {
  const Field& F = phi.field();
  BiPoly out(F);
  for (const auto& t : phi.terms()) out.add_term(t.i, t.j, F.pow(t.c, power));
  return out;
}

// Factors over a small extension where a good point exists, then
// multiplies Frobenius orbits back down to the base field.
std::vector<BiPoly> factor_via_extension(const BiPoly& phi) {
  const Field& F = phi.field();
  if (F.q() > kEnumerationLimit)
    fail(ErrorKind::DegreeGuardExceeded, "no specialization point found in a large field");
  for (unsigned k = 2;; ++k) {
    const Field E = F.extension(k);
    const Embedding emb = embed(F, E);
    const BiPoly lifted = map_coeffs(phi, emb);
    auto c = find_good_point(lifted);
    if (!c) continue;
    std::vector<BiPoly> parts = lift_and_recombine(lifted, *c);

    std::unordered_map<Elem, Elem, ElemHash> back;
    for (auto a : F.elements()) back.emplace(emb.apply(a), a);

    std::vector<bool> used(parts.size(), false);
    std::vector<BiPoly> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      BiPoly orbit = parts[i];
      BiPoly cur = frobenius_coeffs(parts[i], F.q()).normalized();
      while (!(cur == parts[i])) {
        auto it = std::find(parts.begin(), parts.end(), cur);
        if (it == parts.end()) fail(ErrorKind::InvalidArgument, "internal: Frobenius orbit left the factor set");
        used[static_cast<std::size_t>(it - parts.begin())] = true;
        orbit = orbit * cur;
        cur = frobenius_coeffs(cur, F.q()).normalized();
      }
      orbit = orbit.normalized();
      BiPoly down(F);
      for (const auto& t : orbit.terms()) {
        auto it = back.find(t.c);
        if (it == back.end()) fail(ErrorKind::InvalidArgument, "internal: orbit product not defined over the base field");
        down.add_term(t.i, t.j, it->second);
      }
      out.push_back(down);
    }
    return out;
  }
}

// phi squarefree, no pure-y factors, all factors separable in x.
std::vector<BiPoly> factor_separable(const BiPoly& phi) {
  if (*phi.deg_x() == 1) return {phi.normalized()};
  if (auto c = find_good_point(phi)) return lift_and_recombine(phi, *c);

  // Shears y -> y + lambda*x move the specialization lines off the bad points.
  const Field& F = phi.field();
  const std::size_t d = *phi.total_degree();
  const std::uint64_t budget = std::min(F.q(), kPointBudget);
  for (std::uint64_t v = 1; v < budget; ++v) {
    const Elem lambda{v};
    BiPoly sheared = substitute_y_affine(phi, lambda, F.zero());
    if (*sheared.deg_x() != d) continue;
    if (!gcd(sheared, derivative_x(sheared)).is_constant()) continue;
    auto c = find_good_point(sheared);
    if (!c) continue;
    std::vector<BiPoly> out = lift_and_recombine(sheared, *c);
    for (auto& h : out) h = substitute_y_affine(h, F.neg(lambda), F.zero()).normalized();
    return out;
  }
  return factor_via_extension(phi);
}

// phi squarefree and without pure-y factors.
std::vector<BiPoly> factor_squarefree(const BiPoly& phi) {
  std::vector<BiPoly> out;
  if (phi.is_constant()) return out;
  BiPoly insep = gcd(phi, derivative_x(phi));
  BiPoly sep = exact_quotient(phi, insep);
  if (!sep.is_constant())
    for (auto& h : factor_separable(sep)) out.push_back(h);
  if (!insep.is_constant())
    for (auto& h : factor_separable(insep.swapped())) out.push_back(h.swapped().normalized());
  return out;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const Field& F = a.field();
  const UniPoly ca = content_in_y(a), cb = content_in_y(b);
  const UniPoly cg = gcd(ca, cb);
  BiPoly A = divide_by_y_poly(a, ca);
  BiPoly B = divide_by_y_poly(b, cb);
  if (*A.deg_x() < *B.deg_x()) std::swap(A, B);
  while (!B.is_zero() && *B.deg_x() > 0) {
    BiPoly R = prem(A, B);
    A = std::move(B);
    B = primitive_part(R);
  }
  BiPoly G = B.is_zero() ? A : BiPoly::constant(F, F.one());
  return (BiPoly::in_y(cg) * G).normalized();
}

BiPoly expand(const BiFactorization& fac, const Field& f) {
  BiPoly acc = BiPoly::constant(f, fac.unit);
  for (const auto& [g, m] : fac.factors) acc = acc * pow(g, m);
  return acc;
}

BiFactorization factor_bi(const BiPoly& phi) {
  if (phi.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  if (*phi.total_degree() > kBivariateDegreeGuard)
    fail(ErrorKind::DegreeGuardExceeded, "total degree exceeds " + std::to_string(kBivariateDegreeGuard));
  BiFactorization out{phi.lead_coeff(), {}};
  if (phi.is_constant()) return out;
  const BiPoly norm = phi.normalized();

  const UniPoly cont = content_in_y(norm);
  const BiPoly prim = divide_by_y_poly(norm, cont);
  for (const auto& [g, m] : factor_uni(cont).factors) out.factors.emplace_back(BiPoly::in_y(g), m);
  for (const auto& [part, m] : squarefree_bi(prim))
    for (auto& h : factor_squarefree(part)) out.factors.emplace_back(std::move(h), m);

  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return encoding_less(a.first, b.first); });
  std::vector<std::pair<BiPoly, unsigned>> merged;
  for (auto& f : out.factors) {
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(std::move(f));
  }
  out.factors = std::move(merged);
  return out;
}

AbsIrredVerdict is_absolutely_irreducible(const BiPoly& g) {
  const auto fac = factor_bi(g);
  if (fac.factors.size() != 1 || fac.factors[0].second != 1)
    fail(ErrorKind::NotIrreducibleInput, "input is not irreducible over its base field");
  const std::size_t d = *g.total_degree();
  if (d == 1) return {};
  const Field& F = g.field();
  for (auto s : prime_factors(d)) {
    const Field E = F.extension(static_cast<unsigned>(s));
    const Embedding emb = embed(F, E);
    auto over = factor_bi(map_coeffs(g, emb));
    if (over.factors.size() > 1)
      return {false, static_cast<unsigned>(s), over.factors.front().first};
  }
  return {};
}

std::size_t count_abs_irred_rational_factors(const BiPoly& phi) {
  std::size_t n = 0;
  for (const auto& [h, m] : factor_bi(phi).factors)
    if (is_absolutely_irreducible(h).absolutely_irreducible) ++n;
  return n;
}

}  // namespace ppfq
