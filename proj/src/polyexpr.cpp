#include "ppfq/polyexpr.hpp"

#include <cctype>

namespace ppfq {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& F, bool allow_y) : s_(text), F_(F), allow_y_(allow_y) {}

  BiPoly run() {
    BiPoly out(F_);
    skip();
    if (at_end()) error("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
      skip();
    }
    while (true) {
      auto [c, i, j] = term();
      out.add_term(i, j, negative ? F_.neg(c) : c);
      skip();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') error(std::string("unexpected '") + op + "'");
      take();
      skip();
      negative = op == '-';
    }
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos_));
  }
  [[noreturn]] void overflow(const std::string& msg) const {
    fail(ErrorKind::ExponentOverflow, msg + " at position " + std::to_string(pos_));
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char take() { return s_[pos_++]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool next_is(char c) {
    skip();
    return peek() == c;
  }

  // Coefficient literal reduced mod p digit by digit, so any length works.
  Elem literal() {
    std::uint64_t v = 0;
    const std::uint64_t p = F_.p();
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = (v * 10 + static_cast<std::uint64_t>(take() - '0')) % p;
    return F_.from_int(static_cast<std::int64_t>(v));
  }

  std::uint64_t exponent(std::uint64_t limit) {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected exponent");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(take() - '0');
      if (v > limit) overflow("exponent too large");
    }
    return v;
  }

  std::uint64_t maybe_power(std::uint64_t limit) {
    if (next_is('^')) {
      take();
      return exponent(limit);
    }
    return 1;
  }

  Elem generator() {
    if (F_.is_prime_field()) error_generator();
    take();
    return F_.pow(F_.generator(), maybe_power(UINT64_MAX / 10));
  }

  [[noreturn]] void error_generator() const {
    fail(ErrorKind::GeneratorInPrimeField, "'g' is undefined over a prime field (position " + std::to_string(pos_) + ")");
  }

  std::tuple<Elem, std::size_t, std::size_t> term() {
    Elem c = F_.one();
    bool have_coeff = false;
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = literal();
      have_coeff = true;
      if (next_is('*')) {
        std::size_t save = pos_;
        take();
        skip();
        if (peek() == 'g') {
          c = F_.mul(c, generator());
        } else {
          pos_ = save;
        }
      } else if (peek() == 'g') {
        c = F_.mul(c, generator());
      }
    } else if (peek() == 'g') {
      c = generator();
      have_coeff = true;
    }
    if (have_coeff) {
      skip();
      if (peek() == '*') {
        take();
        skip();
        if (peek() != 'x' && peek() != 'y') error("expected 'x' or 'y' after '*'");
      }
      if (peek() != 'x' && peek() != 'y') return {c, 0, 0};
    }
    std::size_t i = 0, j = 0;
    skip();
    if (peek() == 'x') {
      take();
      i = maybe_power(kMaxVariableExponent);
      skip();
      if (peek() == '*') {
        take();
        skip();
        if (peek() != 'y') error("expected 'y' after '*'");
      }
    }
    if (peek() == 'y') {
      if (!allow_y_) error("'y' is not allowed in a univariate polynomial");
      take();
      j = maybe_power(kMaxVariableExponent);
    } else if (i == 0) {
      error("expected a coefficient or monomial");
    }
    return {c, i, j};
  }

  std::string_view s_;
  const Field& F_;
  bool allow_y_;
  std::size_t pos_ = 0;
};

std::string monomial(std::size_t i, std::size_t j) {
  std::string out;
  auto var = [&](char v, std::size_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += v;
    if (e > 1) out += '^' + std::to_string(e);
  };
  var('x', i);
  var('y', j);
  return out;
}

// c x^i y^j with c expanded over the basis 1, g, g^2, ...
void append_term(std::string& out, const Field& F, Elem c, std::size_t i, std::size_t j) {
  const auto digits = F.coeffs(c);
  const std::string mono = monomial(i, j);
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (digits[k] == 0) continue;
    std::string t;
    if (digits[k] != 1 || (k == 0 && mono.empty())) t = std::to_string(digits[k]);
    auto join = [&](const std::string& part) {
      if (part.empty()) return;
      if (!t.empty()) t += '*';
      t += part;
    };
    if (k >= 1) join(k == 1 ? "g" : "g^" + std::to_string(k));
    join(mono);
    if (!out.empty()) out += '+';
    out += t;
  }
}

}  // namespace

BiPoly parse_bipoly(std::string_view text, const Field& field) { return Parser(text, field, true).run(); }

UniPoly parse_unipoly(std::string_view text, const Field& field) {
  BiPoly b = Parser(text, field, false).run();
  return b.is_zero() ? UniPoly(field) : b.y_coeff(0);
}

std::vector<std::uint64_t> parse_modulus(std::string_view text, std::uint64_t p) {
  Field F = Field::make(p, 1);
  UniPoly f = parse_unipoly(text, F);
  std::vector<std::uint64_t> out;
  for (auto c : f.coeffs()) out.push_back(c.v);
  return out;
}

std::string print(const UniPoly& f) {
  std::string out;
  for (std::size_t k = f.coeffs().size(); k-- > 0;)
    if (f.coeff(k) != Elem{0}) append_term(out, f.field(), f.coeff(k), k, 0);
  return out.empty() ? "0" : out;
}

std::string print(const BiPoly& f) {
  std::string out;
  for (const auto& t : f.terms()) append_term(out, f.field(), t.c, t.i, t.j);
  return out.empty() ? "0" : out;
}

std::string print_int_poly(const std::vector<std::uint64_t>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    std::string t;
    const std::string mono = monomial(k, 0);
    if (coeffs[k] != 1 || mono.empty()) t = std::to_string(coeffs[k]);
    if (!mono.empty()) t += (t.empty() ? "" : "*") + mono;
    if (!out.empty()) out += '+';
    out += t;
  }
  return out.empty() ? "0" : out;
}

}  // namespace ppfq
