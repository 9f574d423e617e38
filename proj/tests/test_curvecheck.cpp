#include "doctest.h"
#include "ppfq/curvecheck.hpp"
#include "ppfq/pptest.hpp"
#include "test_support.hpp"

using namespace ppfq;
using ppfq::testing::upoly;

namespace {

BiPoly bi(const Field& F, std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> terms) {
  BiPoly out(F);
  for (auto [i, j, c] : terms) out.add_term(i, j, F.from_int(c));
  return out;
}

}  // namespace

TEST_CASE("count_points examples") {
  Field f7 = Field::make(7, 1), f5 = Field::make(5, 1);
  CHECK(count_points(bi(f7, {{1, 0, 1}, {0, 1, -1}})) == 7);
  BiPoly ell = bi(f5, {{0, 2, 1}, {3, 0, -1}, {1, 0, -1}});
  CHECK(count_points(ell) == 3);
  CHECK(ppfq::testing::brute_count(ell) == 3);
  CHECK(count_points(difference_quotient(upoly(f5, {0, 0, 1}))) == 5);
  CHECK(count_points(BiPoly(f5)) == 25);

  try {
    (void)count_points(BiPoly::constant(Field::make(2, 14), Elem{1}));
    FAIL("expected FieldTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldTooLarge);
  }
}

TEST_CASE("verify_weil examples") {
  Field f5 = Field::make(5, 1);
  auto r = verify_weil(bi(f5, {{0, 2, 1}, {3, 0, -1}, {1, 0, -1}}));
  CHECK(r.count == 3);
  CHECK(r.interval.lo == -1);
  CHECK(r.interval.hi == 10);
  REQUIRE(r.within.has_value());
  CHECK(*r.within);

  auto s = verify_weil(bi(f5, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
  CHECK_FALSE(s.within.has_value());
  REQUIRE(s.abs_irred.has_value());
  CHECK_FALSE(s.abs_irred->absolutely_irreducible);

  for (std::uint64_t q : {5u, 7u, 9u}) {
    Field F = Field::of_order(q);
    auto t = verify_weil(bi(F, {{1, 0, 1}, {0, 1, -1}}));
    CHECK(t.count == q);
    CHECK(t.interval.lo == static_cast<std::int64_t>(q));
    CHECK(t.interval.hi == static_cast<std::int64_t>(q) + 1);
    CHECK(t.within == std::optional<bool>(true));
  }

  auto red = verify_weil(bi(f5, {{2, 0, 1}, {0, 2, -1}}));  // (x - y)(x + y)
  CHECK_FALSE(red.irreducible);
  CHECK_FALSE(red.within.has_value());
}

TEST_CASE("fixture corpus lies inside the Weil interval") {
  auto corpus = ppfq::testing::weil_corpus();
  CHECK(corpus.size() >= 20);
  for (const auto& phi : corpus) {
    auto r = verify_weil(phi);
    CAPTURE(phi.field().q());
    CHECK(r.count == ppfq::testing::brute_count(phi));
    CHECK(r.within == std::optional<bool>(true));
  }
}

TEST_CASE("zeros of f(x) - f(y) match the value census") {
  Field F = Field::make(5, 1);
  std::size_t mismatches = 0;
  for (std::uint64_t code = 0; code < 3125; ++code) {
    std::vector<Elem> c(5);
    std::uint64_t k = code;
    for (auto& e : c) {
      e = Elem{k % 5};
      k /= 5;
    }
    UniPoly f(F, c);
    auto census = value_census(f);
    std::uint64_t squares = 0;
    for (auto [v, n] : census.counts) squares += n * n;
    if (count_points(difference(f)) != squares) ++mismatches;
    if (census.off_diagonal != squares - 5) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("point counts of products are subadditive") {
  std::mt19937_64 rng(4);
  for (std::uint64_t q : {5u, 7u, 9u}) {
    Field F = Field::of_order(q);
    for (int t = 0; t < 30; ++t) {
      BiPoly a = ppfq::testing::random_bipoly(F, 1 + rng() % 2, rng);
      BiPoly b = ppfq::testing::random_bipoly(F, 1 + rng() % 2, rng);
      if (a.is_zero() || b.is_zero()) continue;
      std::uint64_t common = 0;
      for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint64_t y = 0; y < q; ++y)
          if (eval2(a, Elem{x}, Elem{y}) == F.zero() && eval2(b, Elem{x}, Elem{y}) == F.zero()) ++common;
      const auto ca = count_points(a), cb = count_points(b), cab = count_points(a * b);
      CHECK(cab <= ca + cb);
      CHECK((cab == ca + cb) == (common == 0));
    }
  }
}

TEST_CASE("sharded counts match") {
  Field F = Field::make(13, 1);
  BiPoly phi = bi(F, {{0, 2, 1}, {3, 0, -1}, {1, 0, -1}, {0, 0, 2}});
  const auto one = count_points(phi, 1);
  CHECK(count_points(phi, 3) == one);
  CHECK(count_points(phi, 13) == one);
}
