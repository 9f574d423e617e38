#include "ppfq/ffield.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>

#include "ppfq/intmath.hpp"

namespace ppfq {

namespace {

using Digits = std::array<std::uint64_t, 64>;

// Dense polynomials over F_p used only to vet moduli before a Field exists.
using ZpPoly = std::vector<std::uint64_t>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

ZpPoly zp_rem(ZpPoly a, const ZpPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly t(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
  return zp_rem(std::move(t), m, p);
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint64_t p) {
  ZpPoly acc{1};
  base = zp_rem(std::move(base), m, p);
  while (e) {
    if (e & 1) acc = zp_mulmod(acc, base, m, p);
    e >>= 1;
    if (e) base = zp_mulmod(base, base, m, p);
  }
  return acc;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = zp_rem(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::uint64_t encode(const Digits& digits, const detail::FieldData& d) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < d.r; ++i) v += digits[i] * d.radix[i];
  return v;
}

void decode(std::uint64_t v, Digits& digits, const detail::FieldData& d) {
  for (unsigned i = 0; i < d.r; ++i) {
    digits[i] = v % d.p;
    v /= d.p;
  }
}

std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, const detail::FieldData& d) {
  if (d.r == 1) return (a * b) % d.p;
  return d.generic_mul(a, b);
}

std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e, const detail::FieldData& d) {
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = slow_mul(acc, a, d);
    e >>= 1;
    if (e) a = slow_mul(a, a, d);
  }
  return acc;
}

std::uint64_t find_primitive(const detail::FieldData& d) {
  const std::uint64_t n = d.q - 1;
  const auto ls = prime_factors(n);
  for (std::uint64_t g = 1; g < d.q; ++g) {
    bool ok = true;
    for (auto l : ls)
      if (slow_pow(g, n / l, d) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // q == 2
}

void build_tables(detail::FieldData& d) {
  const std::uint64_t n = d.q - 1;
  const std::uint64_t g = find_primitive(d);
  d.exp.assign(2 * n, 0);
  d.log.assign(d.q, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    d.exp[k] = static_cast<std::uint32_t>(x);
    d.exp[k + n] = static_cast<std::uint32_t>(x);
    d.log[x] = static_cast<std::uint32_t>(k);
    x = d.generic_mul(x, g);
  }
  if (d.p == 2) return;
  d.zech.assign(n, detail::FieldData::kNoLog);
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t v = d.exp[k];
    std::uint64_t s = (v % d.p == d.p - 1) ? v - (d.p - 1) : v + 1;
    if (s != 0) d.zech[k] = d.log[s];
  }
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned r) {
  // Odometer over (c_0, ..., c_{r-1}) with c_0 most significant.
  std::vector<std::uint64_t> c(r + 1, 0);
  c[r] = 1;
  if (r > 1) c[0] = 1;  // anything with c_0 = 0 is divisible by x
  while (true) {
    if (is_irreducible_mod_p(c, p)) return c;
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const detail::FieldData>>& cache() {
  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const detail::FieldData>> c;
  return c;
}

}  // namespace

namespace detail {

std::uint64_t FieldData::generic_add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < r; ++i) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * radix[i];
    a /= p;
    b /= p;
  }
  return out;
}

std::uint64_t FieldData::generic_neg(std::uint64_t a) const {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < r; ++i) {
    std::uint64_t c = a % p;
    out += (c == 0 ? 0 : p - c) * radix[i];
    a /= p;
  }
  return out;
}

std::uint64_t FieldData::generic_mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  Digits da{}, db{};
  decode(a, da, *this);
  decode(b, db, *this);
  std::array<std::uint64_t, 128> t{};
  for (unsigned i = 0; i < r; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < r; ++j) t[i + j] = (t[i + j] + da[i] * db[j]) % p;
  }
  for (unsigned k = 2 * r - 2; k >= r; --k) {
    std::uint64_t c = t[k];
    if (c == 0) continue;
    std::uint64_t nc = p - c;
    for (unsigned i = 0; i < r; ++i) t[k - r + i] = (t[k - r + i] + nc * modulus[i]) % p;
    t[k] = 0;
  }
  Digits out{};
  for (unsigned i = 0; i < r; ++i) out[i] = t[i];
  return encode(out, *this);
}

}  // namespace detail

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  ZpPoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned r = static_cast<unsigned>(f.size() - 1);
  if (r == 1) return true;
  if (f[0] == 0) return false;
  const ZpPoly x{0, 1};
  // x^(p^k) mod f for k = 0..r
  std::vector<ZpPoly> frob{zp_rem(x, f, p)};
  for (unsigned k = 1; k <= r; ++k) frob.push_back(zp_powmod(frob.back(), p, f, p));
  auto minus_x = [&](ZpPoly a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob[r]).empty()) return false;
  for (auto l : prime_factors(r)) {
    ZpPoly g = zp_gcd(f, minus_x(frob[r / l]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field Field::make(std::uint64_t p, unsigned r, std::optional<std::vector<std::uint64_t>> modulus) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    fail(ErrorKind::NotPrime, std::to_string(p) + " is not a prime below 2^32");
  if (r == 0) fail(ErrorKind::DegreeMismatch, "extension degree must be at least 1");
  auto q = checked_pow(p, r);
  if (!q || *q > (std::uint64_t{1} << 63))
    fail(ErrorKind::FieldTooLarge, "field order exceeds 2^63");

  if (!modulus) {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find({p, r});
    if (it != cache().end()) return Field(it->second);
  }

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->r = r;
  d->q = *q;
  if (modulus) {
    auto m = *modulus;
    for (auto& c : m) c %= p;
    trim(m);
    if (m.size() != r + 1)
      fail(ErrorKind::DegreeMismatch, "modulus degree differs from extension degree " + std::to_string(r));
    if (m.back() != 1) fail(ErrorKind::DegreeMismatch, "modulus must be monic");
    if (!is_irreducible_mod_p(m, p)) fail(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    d->modulus = std::move(m);
  } else {
    d->modulus = smallest_irreducible(p, r);
    d->default_modulus = true;
  }
  d->radix.resize(r);
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < r; ++i) {
    d->radix[i] = acc;
    if (i + 1 < r) acc *= p;
  }
  if (r == 1) {
    d->kind = detail::FieldKind::Prime;
  } else if (d->q <= kTableLimit) {
    build_tables(*d);
    d->kind = detail::FieldKind::Tabled;
  } else {
    d->kind = detail::FieldKind::Generic;
  }

  std::shared_ptr<const detail::FieldData> cd = std::move(d);
  if (!modulus) {
    std::lock_guard lock(cache_mutex());
    auto [it, inserted] = cache().emplace(std::pair{p, r}, cd);
    return Field(it->second);
  }
  return Field(cd);
}

Field Field::of_order(std::uint64_t q) {
  auto pr = prime_power_root(q);
  if (!pr) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  return make(pr->first, pr->second);
}

Field Field::extension(unsigned m) const {
  if (m == 0) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  auto total = checked_pow(d_->q, m);
  if (!total || *total > (std::uint64_t{1} << 63))
    fail(ErrorKind::ExtensionTooLarge, "extension order exceeds 2^63");
  return make(d_->p, d_->r * m);
}

Elem Field::generator() const {
  if (d_->r == 1) return from_int(-static_cast<std::int64_t>(d_->modulus[0]));
  return {d_->p};
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t p = static_cast<std::int64_t>(d_->p);
  std::int64_t m = n % p;
  if (m < 0) m += p;
  return {static_cast<std::uint64_t>(m)};
}

Elem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > d_->r) fail(ErrorKind::DegreeMismatch, "too many coordinates for field element");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += (coeffs[i] % d_->p) * d_->radix[i];
  return {v};
}

std::vector<std::uint64_t> Field::coeffs(Elem a) const {
  std::vector<std::uint64_t> out(d_->r);
  for (unsigned i = 0; i < d_->r; ++i) {
    out[i] = a.v % d_->p;
    a.v /= d_->p;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const auto& d = *d_;
  switch (d.kind) {
    case detail::FieldKind::Prime:
      return {inv_mod(a.v, d.p)};
    case detail::FieldKind::Tabled: {
      std::uint32_t l = d.log[a.v];
      return {d.exp[l == 0 ? 0 : (d.q - 1) - l]};
    }
    case detail::FieldKind::Generic:
      return {slow_pow(a.v, d.q - 2, d)};
  }
  return {};
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  const auto& d = *d_;
  if (k == 0) return one();
  if (a.v == 0) return zero();
  if (d.kind == detail::FieldKind::Tabled) {
    const std::uint64_t n = d.q - 1;
    u128 e = static_cast<u128>(d.log[a.v]) * (k % n);
    return {d.exp[static_cast<std::uint64_t>(e % n)]};
  }
  if (d.kind == detail::FieldKind::Prime) {
    std::uint64_t acc = 1, base = a.v;
    while (k) {
      if (k & 1) acc = acc * base % d.p;
      k >>= 1;
      if (k) base = base * base % d.p;
    }
    return {acc};
  }
  return {slow_pow(a.v, k, d)};
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a.v == 0) fail(ErrorKind::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t order = d_->q - 1;
  for (auto l : prime_factors(order))
    while (order % l == 0 && pow(a, order / l) == one()) order /= l;
  return order;
}

std::vector<Elem> Field::elements() const {
  if (d_->q > kEnumerationLimit)
    fail(ErrorKind::FieldTooLarge, "cannot enumerate a field with " + std::to_string(d_->q) + " elements");
  std::vector<Elem> out(d_->q);
  for (std::uint64_t i = 0; i < d_->q; ++i) out[i] = {i};
  return out;
}

std::string Field::format(Elem a) const {
  if (d_->r == 1) return std::to_string(a.v);
  auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(d_->r) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << 'g';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << d_->q;
  if (d_->r > 1) {
    os << " = F_" << d_->p << "[g]/(";
    bool first = true;
    for (int i = static_cast<int>(d_->r); i >= 0; --i) {
      auto c = d_->modulus[i];
      if (c == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0) {
        os << c;
        continue;
      }
      if (c != 1) os << c << '*';
      os << 'g';
      if (i > 1) os << '^' << i;
    }
    os << ')';
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus;
}

Embedding::Embedding(Field source, Field target, Elem generator_image)
    : src_(std::move(source)), dst_(std::move(target)), gen_(generator_image) {
  Elem acc = dst_.one();
  for (unsigned i = 0; i < src_.r(); ++i) {
    basis_.push_back(acc);
    acc = dst_.mul(acc, gen_);
  }
  if (src_.q() <= (std::uint64_t{1} << 16)) {
    table_.reserve(src_.q());
    for (std::uint64_t v = 0; v < src_.q(); ++v) {
      Elem out = dst_.zero();
      auto c = src_.coeffs({v});
      for (unsigned i = 0; i < src_.r(); ++i)
        if (c[i]) out = dst_.add(out, dst_.mul(dst_.from_int(static_cast<std::int64_t>(c[i])), basis_[i]));
      table_.push_back(out);
    }
  }
}

Elem Embedding::apply(Elem a) const {
  if (!table_.empty()) return table_[a.v];
  Elem out = dst_.zero();
  auto c = src_.coeffs(a);
  for (unsigned i = 0; i < src_.r(); ++i)
    if (c[i]) out = dst_.add(out, dst_.mul(dst_.from_int(static_cast<std::int64_t>(c[i])), basis_[i]));
  return out;
}

}  // namespace ppfq
