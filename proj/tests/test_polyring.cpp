#include "doctest.h"
#include "ppfq/polyring.hpp"
#include "test_support.hpp"

using namespace ppfq;
using ppfq::testing::upoly;

namespace {

Field f49_paper() { return Field::make(7, 2, std::vector<std::uint64_t>{3, 6, 1}); }

UniPoly paper_f49_poly() {
  Field F = f49_paper();
  Elem e = F.generator();
  std::vector<Elem> c(8);
  c[7] = F.one();
  c[5] = e;
  c[3] = F.pow(e, 18);
  c[1] = F.pow(e, 35);
  return UniPoly(F, c);
}

BiPoly bi(const Field& F, std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> terms) {
  BiPoly out(F);
  for (auto [i, j, c] : terms) out.add_term(i, j, F.from_int(c));
  return out;
}

}  // namespace

TEST_CASE("eval") {
  Field f5 = Field::make(5, 1), f7 = Field::make(7, 1);
  CHECK(eval(upoly(f5, {1, 0, 1}), f5.from_int(2)) == f5.zero());
  CHECK(eval(paper_f49_poly(), Elem{0}) == Elem{0});
  std::vector<std::int64_t> c(11, 0);
  c[10] = 1;
  c[1] = 3;
  CHECK(eval(upoly(f7, c), f7.from_int(2)) == f7.from_int(1));

  // Evaluation through an embedding agrees with mapping coefficients first.
  Field f343 = Field::make(7, 3);
  auto emb = embed(f7, f343);
  UniPoly g = upoly(f7, c);
  for (std::uint64_t v = 0; v < 343; v += 17)
    CHECK(eval(g, Elem{v}, emb) == eval(map_coeffs(g, emb), Elem{v}));
  CHECK_THROWS_AS(eval(upoly(f5, {1, 1}), Elem{1}, emb), Error);
}

TEST_CASE("derivative") {
  Field f7 = Field::make(7, 1), f2 = Field::make(2, 1), f5 = Field::make(5, 1);
  CHECK(derivative(upoly(f7, {0, 0, 0, 0, 0, 0, 0, 1})).is_zero());
  CHECK(derivative(upoly(f2, {0, 0, 1, 0, 1})).is_zero());
  CHECK(derivative(upoly(f5, {0, 1, 0, 1})) == upoly(f5, {1, 0, 3}));
}

TEST_CASE("pth_decompose") {
  Field f2 = Field::make(2, 1), f3 = Field::make(3, 1), f5 = Field::make(5, 1);
  auto d1 = pth_decompose(upoly(f2, {0, 0, 1, 0, 1}));
  CHECK(d1.f_core == upoly(f2, {0, 1, 1}));
  CHECK(d1.t == 1);
  auto d2 = pth_decompose(upoly(f3, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(d2.f_core == upoly(f3, {0, 1}));
  CHECK(d2.t == 2);
  auto d3 = pth_decompose(upoly(f5, {0, 1, 0, 1}));
  CHECK(d3.f_core == upoly(f5, {0, 1, 0, 1}));
  CHECK(d3.t == 0);
  try {
    (void)pth_decompose(upoly(f5, {3}));
    FAIL("expected ConstantInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstantInput);
  }
}

TEST_CASE("difference_quotient") {
  Field f5 = Field::make(5, 1);
  CHECK(difference_quotient(upoly(f5, {0, 0, 1})) == bi(f5, {{1, 0, 1}, {0, 1, 1}}));
  CHECK(difference_quotient(upoly(f5, {0, 0, 0, 1})) == bi(f5, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
  CHECK(difference_quotient(upoly(f5, {0, 1, 0, 1})) == bi(f5, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {0, 0, 1}}));
  CHECK_THROWS_AS(difference_quotient(upoly(f5, {2})), Error);
}

TEST_CASE("bivariate operations") {
  Field f5 = Field::make(5, 1);
  BiPoly q = bi(f5, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}});
  CHECK(diagonal(q) == upoly(f5, {0, 0, 3}));
  CHECK(eval2(q, f5.one(), f5.one()) == f5.from_int(3));
  CHECK(*difference_quotient(paper_f49_poly()).total_degree() == 6);
  CHECK(specialize_y(q, f5.from_int(2)) == upoly(f5, {4, 2, 1}));
  CHECK(specialize_x(q, f5.from_int(2)) == upoly(f5, {4, 2, 1}));
  CHECK_FALSE(BiPoly(f5).total_degree().has_value());

  Field f7 = Field::make(7, 1);
  CHECK_THROWS_AS(q + bi(f7, {{1, 0, 1}}), Error);

  // Exact division: x^2 + xy + y^2 = (x - 2y)(x - 4y) over F_7.
  BiPoly l1 = bi(f7, {{1, 0, 1}, {0, 1, -2}}), l2 = bi(f7, {{1, 0, 1}, {0, 1, -4}});
  BiPoly prod = l1 * l2;
  CHECK(prod == bi(f7, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
  auto quot = divide_exact(prod, l1);
  REQUIRE(quot.has_value());
  CHECK(*quot == l2);
  CHECK_FALSE(divide_exact(prod, bi(f7, {{1, 0, 1}, {0, 1, 1}})).has_value());

  // Affine substitution round trip.
  BiPoly s = substitute_y_affine(prod, f7.from_int(3), f7.from_int(5));
  CHECK(substitute_y_affine(substitute_y_affine(s, f7.zero(), f7.from_int(-5)), f7.from_int(-3), f7.zero()) == prod);
}

TEST_CASE("difference quotient identities on random polynomials") {
  std::mt19937_64 rng(2024);
  const std::uint64_t qs[] = {2, 3, 4, 5, 7, 8, 9};
  int checked = 0;
  for (int t = 0; t < 1200; ++t) {
    Field F = Field::of_order(qs[t % 7]);
    std::size_t deg = 1 + static_cast<std::size_t>(rng() % 7);
    UniPoly f = ppfq::testing::random_poly(F, deg, rng);
    BiPoly fs = difference_quotient(f);
    BiPoly x_minus_y = BiPoly::from_terms(F, {{1, 0, F.one()}, {0, 1, F.neg(F.one())}});
    CHECK(x_minus_y * fs == difference(f));
    CHECK(diagonal(fs) == derivative(f));
    CHECK(*fs.total_degree() == deg - 1);
    auto dec = pth_decompose(f);
    CHECK_FALSE(derivative(dec.f_core).is_zero());
    UniPoly back = dec.f_core;
    for (unsigned k = 0; k < dec.t; ++k) back = pow(back, F.p());
    CHECK(back == f);
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("p-th powers decompose back") {
  std::mt19937_64 rng(99);
  for (std::uint64_t q : {2u, 3u, 4u, 9u}) {
    Field F = Field::of_order(q);
    for (int t = 0; t < 50; ++t) {
      UniPoly g = ppfq::testing::random_poly(F, 1 + rng() % 3, rng);
      if (derivative(g).is_zero()) continue;
      UniPoly f = pow(pow(g, F.p()), F.p());
      auto dec = pth_decompose(f);
      CHECK(dec.t == 2);
      CHECK(dec.f_core == g);
    }
  }
}

TEST_CASE("univariate gcd and division") {
  Field F = Field::make(5, 1);
  UniPoly a = upoly(F, {1, 0, 1});   // (x+2)(x+3)
  UniPoly b = upoly(F, {2, 1});      // x+2
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == upoly(F, {3, 1}));
  CHECK(gcd(a * upoly(F, {1, 1}), b * upoly(F, {1, 1})) == upoly(F, {2, 3, 1}));
  auto [g, s, t] = ext_gcd(upoly(F, {1, 1}), upoly(F, {2, 1}));
  CHECK(g == upoly(F, {1}));
  CHECK(s * upoly(F, {1, 1}) + t * upoly(F, {2, 1}) == upoly(F, {1}));
  CHECK_THROWS_AS(divmod(a, UniPoly(F)), Error);
}
