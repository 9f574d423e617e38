#include <algorithm>
#include <random>

#include "ppfq/factor.hpp"
#include "ppfq/intmath.hpp"

namespace ppfq {

namespace {

UniPoly random_poly(const Field& F, std::size_t below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, F.q() - 1);
  std::vector<Elem> v(below_degree);
  for (auto& c : v) c = {pick(rng)};
  return UniPoly(F, std::move(v));
}

// (g_i, i): g_i is the product of the monic irreducibles of degree i dividing f.
std::vector<std::pair<UniPoly, std::size_t>> distinct_degree(UniPoly f) {
  const Field& F = f.field();
  const UniPoly x = UniPoly::x(F);
  std::vector<std::pair<UniPoly, std::size_t>> out;
  UniPoly h = x % f;
  for (std::size_t i = 1; 2 * i <= *f.degree(); ++i) {
    h = powmod(h, F.q(), f);
    UniPoly d = gcd(h - x, f);
    if (!d.is_constant()) {
      f = f / d;
      h = h % f;
      out.emplace_back(std::move(d), i);
    }
  }
  if (!f.is_constant()) {
    std::size_t deg = *f.degree();
    out.emplace_back(std::move(f), deg);
  }
  return out;
}

// Splits a squarefree monic product of irreducibles of degree d.
void equal_degree(const UniPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  const std::size_t n = *g.degree();
  if (n == d) {
    out.push_back(g);
    return;
  }
  const Field& F = g.field();
  const std::uint64_t Q = F.q();
  const UniPoly one = UniPoly::constant(F, F.one());
  while (true) {
    UniPoly a = random_poly(F, n, rng);
    if (a.is_constant()) continue;
    UniPoly b(F);
    if (F.p() == 2) {
      // Absolute trace: sum of a^(2^i), i < r*d.
      const std::size_t terms = static_cast<std::size_t>(F.r()) * d;
      UniPoly t = a % g;
      b = t;
      for (std::size_t i = 1; i < terms; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      // a^((Q^d - 1)/2) = (a^(1 + Q + ... + Q^(d-1)))^((Q-1)/2)
      UniPoly u = a % g;
      UniPoly norm = u;
      for (std::size_t i = 1; i < d; ++i) {
        u = powmod(u, Q, g);
        norm = (norm * u) % g;
      }
      b = powmod(norm, (Q - 1) / 2, g) - one;
    }
    UniPoly h = gcd(b, g);
    if (h.is_constant() || *h.degree() == n) continue;
    equal_degree(h, d, rng, out);
    equal_degree(g / h, d, rng, out);
    return;
  }
}

}  // namespace

UniPoly expand(const UniFactorization& fac, const Field& f) {
  UniPoly acc = UniPoly::constant(f, fac.unit);
  for (const auto& [g, m] : fac.factors) acc = acc * pow(g, m);
  return acc;
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (f.is_constant()) return out;
  const unsigned p = static_cast<unsigned>(std::min<std::uint64_t>(f.field().p(), 1u << 30));
  UniPoly c = gcd(f, derivative(f));
  UniPoly w = f.monic() / c;
  unsigned i = 1;
  while (!w.is_constant()) {
    UniPoly y = gcd(w, c);
    UniPoly z = w / y;
    if (!z.is_constant()) out.emplace_back(z.monic(), i);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_constant()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c.monic()))) out.emplace_back(g, m * p);
  }
  return out;
}

UniFactorization factor_uni(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  UniFactorization out{f.leading(), {}};
  if (f.is_constant()) return out;
  std::mt19937_64 rng(0x5eed5eedULL);
  for (const auto& [part, m] : squarefree_decomposition(f.monic())) {
    for (const auto& [g, d] : distinct_degree(part)) {
      std::vector<UniPoly> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& piece : pieces) out.factors.emplace_back(std::move(piece), m);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return encoding_less(a.first, b.first); });
  return out;
}

std::vector<Elem> roots(const UniPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial has every element as root");
  std::vector<Elem> out;
  if (f.is_constant()) return out;
  const Field& F = f.field();
  UniPoly m = f.monic();
  const UniPoly x = UniPoly::x(F);
  UniPoly split = gcd(m, powmod(x, F.q(), m) - x);
  if (split.is_constant()) return out;
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<UniPoly> lin;
  equal_degree(split, 1, rng, lin);
  for (const auto& l : lin) out.push_back(F.neg(l.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

Embedding embed(const Field& src, const Field& dst) {
  if (src.p() != dst.p() || dst.r() % src.r() != 0)
    fail(ErrorKind::NotASubfield, src.describe() + " is not a subfield of " + dst.describe());
  std::vector<Elem> mc;
  for (auto c : src.modulus()) mc.push_back(dst.from_int(static_cast<std::int64_t>(c)));
  auto rts = roots(UniPoly(dst, std::move(mc)));
  if (rts.empty()) fail(ErrorKind::NotASubfield, "source modulus has no root in the target");
  return Embedding(src, dst, rts.front());
}

}  // namespace ppfq
