#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "ppfq/ffield.hpp"

namespace ppfq {

/// Degree of a polynomial; the zero polynomial has no degree (-infinity).
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over a finite field, ascending coefficients,
/// no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field f) : f_(std::move(f)) {}
  UniPoly(Field f, std::vector<Elem> coeffs);

  static UniPoly constant(Field f, Elem c);
  static UniPoly monomial(Field f, Elem c, std::size_t k);
  static UniPoly x(Field f) { return monomial(f, f.one(), 1); }
  /// Coefficients given as integers reduced into the prime field.
  static UniPoly from_ints(Field f, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  Elem leading() const { return c_.empty() ? Elem{} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == f_.one(); }

  UniPoly monic() const;
  UniPoly scaled(Elem c) const;
  UniPoly shifted(std::size_t k) const;  // times x^k

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_ && a.f_ == b.f_; }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

 private:
  void trim();

  Field f_;
  std::vector<Elem> c_;
};

// Orders polynomials by degree, then coefficients from the top down.
bool encoding_less(const UniPoly& a, const UniPoly& b);

Elem eval(const UniPoly& f, Elem a);
/// Evaluates f at a point of the embedding's target field.
Elem eval(const UniPoly& f, Elem a, const Embedding& emb);
UniPoly map_coeffs(const UniPoly& f, const Embedding& emb);

UniPoly derivative(const UniPoly& f);
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// (g, s, t) with s*a + t*b = g monic.
std::tuple<UniPoly, UniPoly, UniPoly> ext_gcd(const UniPoly& a, const UniPoly& b);
UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& m);
UniPoly pow(UniPoly base, std::uint64_t e);
/// f(g(x)).
UniPoly compose(const UniPoly& f, const UniPoly& g);
/// Coefficient-wise p-th root of a polynomial in x^p.
UniPoly pth_root(const UniPoly& f);

struct PthDecomposition {
  UniPoly f_core;
  unsigned t = 0;
};

/// f = f_core^(p^t) with derivative(f_core) != 0. ConstantInput otherwise.
PthDecomposition pth_decompose(const UniPoly& f);

/// Dense bivariate polynomial; coefficient (i, j) multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Field f) : f_(std::move(f)) {}

  struct Term {
    std::size_t i;
    std::size_t j;
    Elem c;
  };
  static BiPoly from_terms(Field f, const std::vector<Term>& terms);
  static BiPoly constant(Field f, Elem c);
  static BiPoly in_x(const UniPoly& f);
  static BiPoly in_y(const UniPoly& f);
  /// sum_i coeffs[i](y) x^i
  static BiPoly from_x_coeffs(Field f, const std::vector<UniPoly>& coeffs);
  /// sum_j coeffs[j](x) y^j
  static BiPoly from_y_coeffs(Field f, const std::vector<UniPoly>& coeffs);

  const Field& field() const { return f_; }
  bool is_zero() const { return nx_ == 0; }
  bool is_constant() const { return nx_ <= 1 && ny_ <= 1; }
  Elem coeff(std::size_t i, std::size_t j) const {
    return (i < nx_ && j < ny_) ? c_[i * ny_ + j] : Elem{};
  }
  void add_term(std::size_t i, std::size_t j, Elem c);

  Degree total_degree() const;
  Degree deg_x() const { return nx_ ? Degree(nx_ - 1) : std::nullopt; }
  Degree deg_y() const { return ny_ ? Degree(ny_ - 1) : std::nullopt; }
  std::vector<Term> terms() const;

  /// Coefficient of x^i as a polynomial in y.
  UniPoly x_coeff(std::size_t i) const;
  /// Coefficient of y^j as a polynomial in x.
  UniPoly y_coeff(std::size_t j) const;
  std::vector<UniPoly> x_coeffs() const;

  /// Leading monomial in lex order with x > y.
  std::pair<std::size_t, std::size_t> lead_exponent() const;
  Elem lead_coeff() const;
  BiPoly normalized() const;
  BiPoly scaled(Elem c) const;
  BiPoly swapped() const;
  BiPoly truncated_y(std::size_t k) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.c_ == b.c_ && a.f_ == b.f_;
  }
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;

 private:
  void resize(std::size_t nx, std::size_t ny);
  void trim();

  Field f_;
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  std::vector<Elem> c_;
};

bool encoding_less(const BiPoly& a, const BiPoly& b);

Elem eval2(const BiPoly& phi, Elem a, Elem b);
/// phi(x, b)
UniPoly specialize_y(const BiPoly& phi, Elem b);
/// phi(a, y), as a polynomial in y
UniPoly specialize_x(const BiPoly& phi, Elem a);
/// phi(x, x)
UniPoly diagonal(const BiPoly& phi);
BiPoly derivative_x(const BiPoly& phi);
BiPoly derivative_y(const BiPoly& phi);
BiPoly pow(const BiPoly& phi, unsigned e);
BiPoly map_coeffs(const BiPoly& phi, const Embedding& emb);
/// phi(x, y + lambda*x + c)
BiPoly substitute_y_affine(const BiPoly& phi, Elem lambda, Elem c);
/// Coefficient-wise p-th root of a polynomial in x^p and y^p.
BiPoly pth_root(const BiPoly& phi);
/// a / b when b divides a exactly.
std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);

/// The unique f* with (x - y) f*(x, y) = f(x) - f(y). ConstantInput for constant f.
BiPoly difference_quotient(const UniPoly& f);

/// f(x) - f(y) as a bivariate polynomial.
BiPoly difference(const UniPoly& f);

void require_same_field(const Field& a, const Field& b);

}  // namespace ppfq
