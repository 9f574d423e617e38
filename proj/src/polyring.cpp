#include "ppfq/polyring.hpp"

#include <algorithm>

namespace ppfq {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) fail(ErrorKind::FieldMismatch, "operands live in different fields");
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

UniPoly UniPoly::constant(Field f, Elem c) { return UniPoly(std::move(f), {c}); }

UniPoly UniPoly::monomial(Field f, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(f), std::move(v));
}

UniPoly UniPoly::from_ints(Field f, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(f.from_int(c));
  return UniPoly(std::move(f), std::move(v));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(f_.inv(c_.back()));
}

UniPoly UniPoly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_.mul(c_[i], c);
  return UniPoly(f_, std::move(v));
}

UniPoly UniPoly::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> v(k, Elem{});
  v.insert(v.end(), c_.begin(), c_.end());
  return UniPoly(f_, std::move(v));
}

UniPoly UniPoly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_.neg(c_[i]);
  return UniPoly(f_, std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.f_, b.f_);
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_.add(a.coeff(i), b.coeff(i));
  return UniPoly(a.f_, std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.f_, b.f_);
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_.sub(a.coeff(i), b.coeff(i));
  return UniPoly(a.f_, std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.f_, b.f_);
  if (a.c_.empty() || b.c_.empty()) return UniPoly(a.f_);
  const Field& f = a.f_;
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].v == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return UniPoly(f, std::move(v));
}

bool encoding_less(const UniPoly& a, const UniPoly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  for (std::size_t k = ca.size(); k-- > 0;)
    if (ca[k] != cb[k]) return ca[k] < cb[k];
  return false;
}

Elem eval(const UniPoly& f, Elem a) {
  const Field& F = f.field();
  Elem acc{};
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = F.add(F.mul(acc, a), c[k]);
  return acc;
}

Elem eval(const UniPoly& f, Elem a, const Embedding& emb) {
  require_same_field(f.field(), emb.source());
  const Field& F = emb.target();
  Elem acc{};
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = F.add(F.mul(acc, a), emb.apply(c[k]));
  return acc;
}

UniPoly map_coeffs(const UniPoly& f, const Embedding& emb) {
  require_same_field(f.field(), emb.source());
  std::vector<Elem> v;
  v.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) v.push_back(emb.apply(c));
  return UniPoly(emb.target(), std::move(v));
}

UniPoly derivative(const UniPoly& f) {
  const Field& F = f.field();
  const auto& c = f.coeffs();
  if (c.size() <= 1) return UniPoly(F);
  std::vector<Elem> v(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k)
    v[k - 1] = F.mul(F.from_int(static_cast<std::int64_t>(k % F.p())), c[k]);
  return UniPoly(F, std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& F = a.field();
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() <= db) return {UniPoly(F), a};
  std::vector<Elem> quot(r.size() - db);
  const Elem lead_inv = F.inv(bc.back());
  for (std::size_t k = r.size(); k-- > db;) {
    Elem c = F.mul(r[k], lead_inv);
    quot[k - db] = c;
    if (c.v == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bc[i]));
  }
  r.resize(db);
  return {UniPoly(F, std::move(quot)), UniPoly(F, std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::tuple<UniPoly, UniPoly, UniPoly> ext_gcd(const UniPoly& a, const UniPoly& b) {
  const Field& F = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(F, F.one()), s1(F);
  UniPoly t0(F), t1 = UniPoly::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elem li = F.inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& m) {
  const Field& F = base.field();
  UniPoly acc = UniPoly::constant(F, F.one()) % m;
  base = base % m;
  while (e) {
    if (e & 1) acc = (acc * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return acc;
}

UniPoly pow(UniPoly base, std::uint64_t e) {
  const Field& F = base.field();
  UniPoly acc = UniPoly::constant(F, F.one());
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

UniPoly compose(const UniPoly& f, const UniPoly& g) {
  require_same_field(f.field(), g.field());
  UniPoly acc(f.field());
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * g + UniPoly::constant(f.field(), c[k]);
  return acc;
}

UniPoly pth_root(const UniPoly& f) {
  const Field& F = f.field();
  const std::uint64_t p = F.p();
  const auto& c = f.coeffs();
  std::vector<Elem> v;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % p == 0) {
      v.push_back(F.pth_root(c[k]));
    } else if (c[k].v != 0) {
      fail(ErrorKind::InvalidArgument, "polynomial is not a p-th power");
    }
  }
  return UniPoly(F, std::move(v));
}

PthDecomposition pth_decompose(const UniPoly& f) {
  if (f.is_constant()) fail(ErrorKind::ConstantInput, "p-th power decomposition of a constant");
  PthDecomposition out{f, 0};
  while (derivative(out.f_core).is_zero()) {
    out.f_core = pth_root(out.f_core);
    ++out.t;
  }
  return out;
}

// ---------------------------------------------------------------- BiPoly

void BiPoly::resize(std::size_t nx, std::size_t ny) {
  if (nx <= nx_ && ny <= ny_) return;
  nx = std::max(nx, nx_);
  ny = std::max(ny, ny_);
  std::vector<Elem> c(nx * ny);
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j) c[i * ny + j] = c_[i * ny_ + j];
  c_ = std::move(c);
  nx_ = nx;
  ny_ = ny;
}

void BiPoly::trim() {
  std::size_t nx = 0, ny = 0;
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j)
      if (c_[i * ny_ + j].v != 0) {
        nx = std::max(nx, i + 1);
        ny = std::max(ny, j + 1);
      }
  if (nx == nx_ && ny == ny_) return;
  std::vector<Elem> c(nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) c[i * ny + j] = c_[i * ny_ + j];
  c_ = std::move(c);
  nx_ = nx;
  ny_ = ny;
}

void BiPoly::add_term(std::size_t i, std::size_t j, Elem c) {
  if (c.v == 0) return;
  resize(i + 1, j + 1);
  Elem& slot = c_[i * ny_ + j];
  slot = f_.add(slot, c);
  if (slot.v == 0) trim();
}

BiPoly BiPoly::from_terms(Field f, const std::vector<Term>& terms) {
  BiPoly out(std::move(f));
  for (const auto& t : terms) out.add_term(t.i, t.j, t.c);
  return out;
}

BiPoly BiPoly::constant(Field f, Elem c) {
  BiPoly out(std::move(f));
  out.add_term(0, 0, c);
  return out;
}

BiPoly BiPoly::in_x(const UniPoly& f) {
  BiPoly out(f.field());
  const auto& c = f.coeffs();
  out.resize(c.size(), c.empty() ? 0 : 1);
  for (std::size_t i = 0; i < c.size(); ++i) out.c_[i] = c[i];
  out.trim();
  return out;
}

BiPoly BiPoly::in_y(const UniPoly& f) {
  BiPoly out(f.field());
  const auto& c = f.coeffs();
  out.resize(c.empty() ? 0 : 1, c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out.c_[j] = c[j];
  out.trim();
  return out;
}

BiPoly BiPoly::from_x_coeffs(Field f, const std::vector<UniPoly>& coeffs) {
  BiPoly out(std::move(f));
  std::size_t ny = 0;
  for (const auto& c : coeffs) ny = std::max(ny, c.coeffs().size());
  out.resize(coeffs.size(), ny);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) out.c_[i * out.ny_ + j] = c[j];
  }
  out.trim();
  return out;
}

BiPoly BiPoly::from_y_coeffs(Field f, const std::vector<UniPoly>& coeffs) {
  BiPoly out(std::move(f));
  std::size_t nx = 0;
  for (const auto& c : coeffs) nx = std::max(nx, c.coeffs().size());
  out.resize(nx, coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& c = coeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out.c_[i * out.ny_ + j] = c[i];
  }
  out.trim();
  return out;
}

Degree BiPoly::total_degree() const {
  if (is_zero()) return std::nullopt;
  std::size_t d = 0;
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j)
      if (c_[i * ny_ + j].v != 0) d = std::max(d, i + j);
  return d;
}

std::vector<BiPoly::Term> BiPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t i = nx_; i-- > 0;)
    for (std::size_t j = ny_; j-- > 0;)
      if (c_[i * ny_ + j].v != 0) out.push_back({i, j, c_[i * ny_ + j]});
  return out;
}

UniPoly BiPoly::x_coeff(std::size_t i) const {
  if (i >= nx_) return UniPoly(f_);
  return UniPoly(f_, std::vector<Elem>(c_.begin() + static_cast<std::ptrdiff_t>(i * ny_),
                                       c_.begin() + static_cast<std::ptrdiff_t>((i + 1) * ny_)));
}

UniPoly BiPoly::y_coeff(std::size_t j) const {
  if (j >= ny_) return UniPoly(f_);
  std::vector<Elem> v(nx_);
  for (std::size_t i = 0; i < nx_; ++i) v[i] = c_[i * ny_ + j];
  return UniPoly(f_, std::move(v));
}

std::vector<UniPoly> BiPoly::x_coeffs() const {
  std::vector<UniPoly> out;
  out.reserve(nx_);
  for (std::size_t i = 0; i < nx_; ++i) out.push_back(x_coeff(i));
  return out;
}

std::pair<std::size_t, std::size_t> BiPoly::lead_exponent() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "zero polynomial has no leading term");
  std::size_t i = nx_ - 1;
  for (std::size_t j = ny_; j-- > 0;)
    if (c_[i * ny_ + j].v != 0) return {i, j};
  return {i, 0};
}

Elem BiPoly::lead_coeff() const {
  auto [i, j] = lead_exponent();
  return coeff(i, j);
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return *this;
  return scaled(f_.inv(lead_coeff()));
}

BiPoly BiPoly::scaled(Elem c) const {
  BiPoly out = *this;
  for (auto& e : out.c_) e = f_.mul(e, c);
  out.trim();
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out(f_);
  out.resize(ny_, nx_);
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = 0; j < ny_; ++j) out.c_[j * nx_ + i] = c_[i * ny_ + j];
  return out;
}

BiPoly BiPoly::truncated_y(std::size_t k) const {
  if (ny_ <= k) return *this;
  BiPoly out = *this;
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = k; j < ny_; ++j) out.c_[i * ny_ + j] = Elem{};
  out.trim();
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& e : out.c_) e = f_.neg(e);
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.f_, b.f_);
  BiPoly out = a;
  out.resize(b.nx_, b.ny_);
  for (std::size_t i = 0; i < b.nx_; ++i)
    for (std::size_t j = 0; j < b.ny_; ++j) {
      Elem& slot = out.c_[i * out.ny_ + j];
      slot = a.f_.add(slot, b.c_[i * b.ny_ + j]);
    }
  out.trim();
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.f_, b.f_);
  const Field& F = a.f_;
  BiPoly out(F);
  if (a.is_zero() || b.is_zero()) return out;
  out.resize(a.nx_ + b.nx_ - 1, a.ny_ + b.ny_ - 1);
  for (std::size_t i = 0; i < a.nx_; ++i)
    for (std::size_t j = 0; j < a.ny_; ++j) {
      Elem ca = a.c_[i * a.ny_ + j];
      if (ca.v == 0) continue;
      for (std::size_t k = 0; k < b.nx_; ++k)
        for (std::size_t l = 0; l < b.ny_; ++l) {
          Elem cb = b.c_[k * b.ny_ + l];
          if (cb.v == 0) continue;
          Elem& slot = out.c_[(i + k) * out.ny_ + (j + l)];
          slot = F.add(slot, F.mul(ca, cb));
        }
    }
  out.trim();
  return out;
}

bool encoding_less(const BiPoly& a, const BiPoly& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  auto ta = a.terms(), tb = b.terms();
  for (std::size_t k = 0; k < std::min(ta.size(), tb.size()); ++k) {
    if (ta[k].i != tb[k].i) return ta[k].i > tb[k].i;
    if (ta[k].j != tb[k].j) return ta[k].j > tb[k].j;
    if (ta[k].c != tb[k].c) return ta[k].c < tb[k].c;
  }
  return ta.size() < tb.size();
}

Elem eval2(const BiPoly& phi, Elem a, Elem b) { return eval(specialize_y(phi, b), a); }

UniPoly specialize_y(const BiPoly& phi, Elem b) {
  const Field& F = phi.field();
  auto dx = phi.deg_x();
  if (!dx) return UniPoly(F);
  std::vector<Elem> v(*dx + 1);
  for (std::size_t i = 0; i <= *dx; ++i) v[i] = eval(phi.x_coeff(i), b);
  return UniPoly(F, std::move(v));
}

UniPoly specialize_x(const BiPoly& phi, Elem a) { return specialize_y(phi.swapped(), a); }

UniPoly diagonal(const BiPoly& phi) {
  const Field& F = phi.field();
  auto d = phi.total_degree();
  if (!d) return UniPoly(F);
  std::vector<Elem> v(*d + 1);
  for (const auto& t : phi.terms()) v[t.i + t.j] = F.add(v[t.i + t.j], t.c);
  return UniPoly(F, std::move(v));
}

BiPoly derivative_x(const BiPoly& phi) {
  const Field& F = phi.field();
  BiPoly out(F);
  for (const auto& t : phi.terms())
    if (t.i > 0) out.add_term(t.i - 1, t.j, F.mul(F.from_int(static_cast<std::int64_t>(t.i % F.p())), t.c));
  return out;
}

BiPoly derivative_y(const BiPoly& phi) { return derivative_x(phi.swapped()).swapped(); }

BiPoly pow(const BiPoly& phi, unsigned e) {
  BiPoly acc = BiPoly::constant(phi.field(), phi.field().one());
  BiPoly base = phi;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

BiPoly map_coeffs(const BiPoly& phi, const Embedding& emb) {
  require_same_field(phi.field(), emb.source());
  BiPoly out(emb.target());
  for (const auto& t : phi.terms()) out.add_term(t.i, t.j, emb.apply(t.c));
  return out;
}

BiPoly substitute_y_affine(const BiPoly& phi, Elem lambda, Elem c) {
  const Field& F = phi.field();
  // s = y + lambda*x + c; Horner in y over the x-coefficient structure.
  BiPoly s = BiPoly::from_terms(F, {{0, 1, F.one()}, {1, 0, lambda}, {0, 0, c}});
  BiPoly acc(F);
  auto dy = phi.deg_y();
  if (!dy) return acc;
  for (std::size_t j = *dy + 1; j-- > 0;) acc = acc * s + BiPoly::in_x(phi.y_coeff(j));
  return acc;
}

BiPoly pth_root(const BiPoly& phi) {
  const Field& F = phi.field();
  const std::uint64_t p = F.p();
  BiPoly out(F);
  for (const auto& t : phi.terms()) {
    if (t.i % p != 0 || t.j % p != 0) fail(ErrorKind::InvalidArgument, "polynomial is not a p-th power");
    out.add_term(t.i / p, t.j / p, F.pth_root(t.c));
  }
  return out;
}

std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "bivariate division by zero");
  const Field& F = a.field();
  BiPoly rem = a;
  BiPoly quot(F);
  const auto [bi, bj] = b.lead_exponent();
  const Elem blead_inv = F.inv(b.coeff(bi, bj));
  const auto bterms = b.terms();
  while (!rem.is_zero()) {
    auto [ri, rj] = rem.lead_exponent();
    if (ri < bi || rj < bj) return std::nullopt;
    Elem c = F.mul(rem.coeff(ri, rj), blead_inv);
    std::size_t di = ri - bi, dj = rj - bj;
    quot.add_term(di, dj, c);
    Elem nc = F.neg(c);
    for (const auto& t : bterms) rem.add_term(t.i + di, t.j + dj, F.mul(nc, t.c));
  }
  return quot;
}

BiPoly difference_quotient(const UniPoly& f) {
  if (f.is_constant()) fail(ErrorKind::ConstantInput, "difference quotient of a constant");
  const Field& F = f.field();
  BiPoly out(F);
  const auto& c = f.coeffs();
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k].v == 0) continue;
    for (std::size_t u = 0; u < k; ++u) out.add_term(u, k - 1 - u, c[k]);
  }
  return out;
}

BiPoly difference(const UniPoly& f) { return BiPoly::in_x(f) - BiPoly::in_y(f); }

}  // namespace ppfq
