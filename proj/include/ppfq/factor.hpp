#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ppfq/polyring.hpp"

namespace ppfq {

inline constexpr std::size_t kBivariateDegreeGuard = 64;

/// unit * prod factor^multiplicity. Univariate factors are monic; bivariate
/// factors have lex-leading coefficient 1 (x > y).
template <class Poly>
struct Factorization {
  Elem unit;
  std::vector<std::pair<Poly, unsigned>> factors;
};

using UniFactorization = Factorization<UniPoly>;
using BiFactorization = Factorization<BiPoly>;

UniPoly expand(const UniFactorization& fac, const Field& f);
BiPoly expand(const BiFactorization& fac, const Field& f);

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f);

/// Irreducible factorization over the coefficient field (squarefree,
/// distinct-degree and equal-degree stages). Ordered by degree, then
/// coefficient encoding.
UniFactorization factor_uni(const UniPoly& f);

/// Distinct roots of f in its coefficient field, ascending by encoding.
std::vector<Elem> roots(const UniPoly& f);

/// Irreducible factorization of a bivariate polynomial over its coefficient
/// field via specialization, Hensel lifting and factor recombination.
BiFactorization factor_bi(const BiPoly& phi);

/// Monic gcd in F[x, y] (lex-leading coefficient 1); gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

struct AbsIrredVerdict {
  bool absolutely_irreducible = true;
  /// Smallest extension degree over which the input factors; 1 when it never does.
  unsigned splitting_degree = 1;
  /// A proper factor over F_{q^s} when s > 1.
  std::optional<BiPoly> witness;
};

/// Decides absolute irreducibility of an F_q-irreducible polynomial by
/// factoring it over F_{q^s} for each prime s dividing its total degree.
AbsIrredVerdict is_absolutely_irreducible(const BiPoly& g);

/// Number of distinct F_q-irreducible factors of phi that stay irreducible
/// over the algebraic closure.
std::size_t count_abs_irred_rational_factors(const BiPoly& phi);

}  // namespace ppfq
