#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppfq/polyring.hpp"

namespace ppfq {

inline constexpr std::uint64_t kMaxVariableExponent = 1u << 16;

// Grammar:
//   poly  := sign? term (sign term)*
//   term  := coeff ('*'? mono)? | mono
//   coeff := uint ('*'? gen)? | gen          gen := 'g' ('^' uint)?
//   mono  := 'x' ('^' uint)? ('*'? 'y' ('^' uint)?)? | 'y' ('^' uint)?
// g is the class of the modulus variable.
BiPoly parse_bipoly(std::string_view text, const Field& field);
/// As parse_bipoly, but y is a syntax error.
UniPoly parse_unipoly(std::string_view text, const Field& field);
/// Integer coefficients over F_p for a modulus; g is rejected.
std::vector<std::uint64_t> parse_modulus(std::string_view text, std::uint64_t p);

std::string print(const UniPoly& f);
std::string print(const BiPoly& f);
/// Prints the coefficients of a prime-field polynomial such as a modulus.
std::string print_int_poly(const std::vector<std::uint64_t>& coeffs);

}  // namespace ppfq
