#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppfq/error.hpp"

namespace ppfq {

/// An element of F_{p^r}, stored as its coefficient encoding
/// sum_i c_i p^i where c_0..c_{r-1} are the coordinates over F_p in the
/// power basis of the modulus variable. Encoding order is enumeration order.
struct Elem {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct ElemHash {
  std::size_t operator()(Elem a) const noexcept { return std::hash<std::uint64_t>{}(a.v); }
};

// Largest field whose log/antilog tables are precomputed.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
// Largest field that may be enumerated element by element.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

namespace detail {

enum class FieldKind { Prime, Tabled, Generic };

struct FieldData {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // ascending, monic, size r + 1
  bool default_modulus = false;
  FieldKind kind = FieldKind::Prime;

  std::vector<std::uint64_t> radix;  // p^i, i < r

  // Tabled fields: exp has length 2(q-1); log[0] unused.
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> zech;  // log(1 + g^k), or kNoLog when that sum is 0
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  std::uint64_t generic_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t generic_neg(std::uint64_t a) const;
  std::uint64_t generic_mul(std::uint64_t a, std::uint64_t b) const;
};

}  // namespace detail

/// F_q with q = p^r, represented flat over F_p modulo a monic irreducible.
/// Copies share the same immutable tables.
class Field {
 public:
  Field() = default;

  /// Without a modulus the lexicographically smallest monic irreducible of
  /// degree r is used (coefficients compared from the constant term up).
  static Field make(std::uint64_t p, unsigned r,
                    std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);
  static Field of_order(std::uint64_t q);

  /// F_{q^m} with its default modulus.
  Field extension(unsigned m) const;

  std::uint64_t p() const { return d_->p; }
  unsigned r() const { return d_->r; }
  std::uint64_t q() const { return d_->q; }
  const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }
  bool has_default_modulus() const { return d_->default_modulus; }
  bool is_prime_field() const { return d_->r == 1; }
  bool valid() const { return d_ != nullptr; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  /// Residue class of the modulus variable (a root of the modulus).
  Elem generator() const;
  Elem from_int(std::int64_t n) const;
  Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(Elem a) const;
  bool contains(Elem a) const { return a.v < d_->q; }

  Elem add(Elem a, Elem b) const {
    const auto& d = *d_;
    switch (d.kind) {
      case detail::FieldKind::Prime: {
        std::uint64_t s = a.v + b.v;
        return {s >= d.p ? s - d.p : s};
      }
      case detail::FieldKind::Tabled:
        if (d.p == 2) return {a.v ^ b.v};
        return tabled_add(a, b);
      case detail::FieldKind::Generic:
        return {d.generic_add(a.v, b.v)};
    }
    return {};
  }

  Elem neg(Elem a) const {
    const auto& d = *d_;
    if (a.v == 0) return a;
    switch (d.kind) {
      case detail::FieldKind::Prime:
        return {d.p - a.v};
      case detail::FieldKind::Tabled:
        if (d.p == 2) return a;
        return {d.exp[d.log[a.v] + (d.q - 1) / 2]};
      case detail::FieldKind::Generic:
        return {d.generic_neg(a.v)};
    }
    return {};
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    const auto& d = *d_;
    switch (d.kind) {
      case detail::FieldKind::Prime:
        return {(a.v * b.v) % d.p};
      case detail::FieldKind::Tabled:
        if (a.v == 0 || b.v == 0) return {0};
        return {d.exp[d.log[a.v] + d.log[b.v]]};
      case detail::FieldKind::Generic:
        return {d.generic_mul(a.v, b.v)};
    }
    return {};
  }

  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  Elem frobenius(Elem a) const { return pow(a, d_->p); }
  /// Inverse of Frobenius: the unique b with b^p = a.
  Elem pth_root(Elem a) const { return pow(a, d_->q / d_->p); }
  std::uint64_t multiplicative_order(Elem a) const;

  /// All q elements in encoding order. FieldTooLarge above 2^20.
  std::vector<Elem> elements() const;

  /// Human-readable element, e.g. "3", "g", "2*g^2+g+1".
  std::string format(Elem a) const;
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  Elem tabled_add(Elem a, Elem b) const {
    const auto& d = *d_;
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    std::uint32_t la = d.log[a.v];
    std::uint32_t lb = d.log[b.v];
    std::uint32_t n = static_cast<std::uint32_t>(d.q - 1);
    std::uint32_t diff = lb >= la ? lb - la : lb + n - la;
    std::uint32_t z = d.zech[diff];
    if (z == detail::FieldData::kNoLog) return {0};
    return {d.exp[la + z]};
  }

  std::shared_ptr<const detail::FieldData> d_;
};

/// F_q -> F_{q'} ring embedding, fixed by the image of the source generator.
class Embedding {
 public:
  Embedding(Field source, Field target, Elem generator_image);

  const Field& source() const { return src_; }
  const Field& target() const { return dst_; }
  Elem generator_image() const { return gen_; }

  Elem apply(Elem a) const;

 private:
  Field src_;
  Field dst_;
  Elem gen_;
  std::vector<Elem> basis_;  // images of generator^i, i < src.r
  std::vector<Elem> table_;  // full lookup for small sources
};

/// The embedding whose generator image is the smallest-encoded root of the
/// source modulus inside the target. NotASubfield unless src.r | dst.r.
Embedding embed(const Field& src, const Field& dst);

/// Irreducibility of a monic polynomial over the prime field F_p
/// (coefficients ascending).
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& poly, std::uint64_t p);

}  // namespace ppfq
