#include <random>

#include "doctest.h"
#include "ppfq/ffield.hpp"

using namespace ppfq;

namespace {

// Brute-force irreducibility for degree 2 and 3: no root in F_p.
bool has_root_mod_p(const std::vector<std::uint64_t>& c, std::uint64_t p) {
  for (std::uint64_t a = 0; a < p; ++a) {
    std::uint64_t acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = (acc * a + c[k]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("make_field examples") {
  Field f7 = Field::make(7, 1);
  CHECK(f7.q() == 7);
  CHECK(f7.modulus() == std::vector<std::uint64_t>{0, 1});

  Field f49 = Field::make(7, 2, std::vector<std::uint64_t>{3, 6, 1});
  CHECK(f49.q() == 49);
  CHECK_FALSE(f49.has_default_modulus());

  // x^2 + 1 over F_7: -1 is a non-residue, so no roots, so irreducible.
  CHECK_FALSE(has_root_mod_p({1, 0, 1}, 7));
  CHECK_NOTHROW(Field::make(7, 2, std::vector<std::uint64_t>{1, 0, 1}));
}

TEST_CASE("default modulus is the lexicographically smallest irreducible") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned r : {2u, 3u}) {
      std::vector<std::uint64_t> expect;
      // c_0 most significant, c_{r-1} fastest
      std::vector<std::uint64_t> c(r + 1, 0);
      c[r] = 1;
      while (true) {
        if (!has_root_mod_p(c, p)) {
          expect = c;
          break;
        }
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        REQUIRE(i >= 0);
        ++c[i];
      }
      Field f = Field::make(p, r);
      CHECK(f.modulus() == expect);
      CHECK(f.has_default_modulus());
      CHECK(Field::make(p, r).modulus() == f.modulus());
    }
  }
  CHECK(Field::make(7, 2).modulus() == std::vector<std::uint64_t>{1, 0, 1});
}

TEST_CASE("make_field errors") {
  CHECK_THROWS_AS(Field::make(9, 1), Error);
  try {
    Field::make(9, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  try {
    Field::make(7, 2, std::vector<std::uint64_t>{0, 0, 1});
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleModulus);
  }
  try {
    Field::make(7, 2, std::vector<std::uint64_t>{1, 1});
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
}

TEST_CASE("arithmetic examples") {
  Field f7 = Field::make(7, 1);
  CHECK(f7.inv(f7.from_int(3)) == f7.from_int(5));

  Field f49 = Field::make(7, 2, std::vector<std::uint64_t>{3, 6, 1});
  Elem e = f49.generator();
  CHECK(f49.coeffs(e) == std::vector<std::uint64_t>{0, 1});
  std::vector<std::uint64_t> e_plus_4{4, 1};
  CHECK(f49.mul(e, e) == f49.from_coeffs(e_plus_4));

  // Power iteration oracle for the order of e.
  Elem acc = e;
  std::uint64_t order = 1;
  while (acc != f49.one()) {
    acc = f49.mul(acc, e);
    ++order;
  }
  CHECK(order == 48);
  CHECK(f49.multiplicative_order(e) == 48);
  CHECK(f49.pow(e, 8) == f49.from_int(3));

  CHECK_THROWS_AS(f7.inv(f7.zero()), Error);
}

TEST_CASE("frobenius examples") {
  Field f49 = Field::make(7, 2, std::vector<std::uint64_t>{3, 6, 1});
  std::vector<std::uint64_t> one_plus_6e{1, 6};
  CHECK(f49.frobenius(f49.generator()) == f49.from_coeffs(one_plus_6e));

  Field f7 = Field::make(7, 1);
  CHECK(f7.frobenius(f7.from_int(5)) == f7.from_int(5));

  Field f4 = Field::make(2, 2);
  for (auto a : f4.elements()) CHECK(f4.frobenius(f4.frobenius(a)) == a);
}

TEST_CASE("enumerate") {
  Field f5 = Field::make(5, 1);
  auto e5 = f5.elements();
  REQUIRE(e5.size() == 5);
  for (std::uint64_t i = 0; i < 5; ++i) CHECK(e5[i] == Elem{i});

  Field f4 = Field::make(2, 2);
  auto e4 = f4.elements();
  REQUIRE(e4.size() == 4);
  CHECK(e4[0] == f4.zero());
  CHECK(e4[1] == f4.one());

  CHECK(Field::make(7, 2).elements().size() == 49);
  try {
    (void)Field::make(2, 21).elements();
    FAIL("expected FieldTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldTooLarge);
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    CAPTURE(q);
    Field F = Field::of_order(q);
    auto el = F.elements();
    bool ok = true;
    for (auto a : el) {
      if (a != F.zero() && F.mul(a, F.inv(a)) != F.one()) ok = false;
      if (F.add(a, F.neg(a)) != F.zero()) ok = false;
      for (auto b : el) {
        if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a)) ok = false;
        if (F.frobenius(F.add(a, b)) != F.add(F.frobenius(a), F.frobenius(b))) ok = false;
        if (F.frobenius(F.mul(a, b)) != F.mul(F.frobenius(a), F.frobenius(b))) ok = false;
        for (auto c : el) {
          if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c))) ok = false;
          if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) ok = false;
          if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) ok = false;
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("untabled extension arithmetic is consistent") {
  // 3^14 > 2^20, so this field multiplies coordinate-wise.
  Field F = Field::make(3, 14);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, F.q() - 1);
  for (int t = 0; t < 300; ++t) {
    Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    if (a != F.zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
    CHECK(F.pow(a, F.q()) == a);
    CHECK(F.pth_root(F.frobenius(a)) == a);
  }
}

TEST_CASE("embed examples") {
  Field f7 = Field::make(7, 1);
  Field f49 = Field::make(7, 2, std::vector<std::uint64_t>{3, 6, 1});
  auto e1 = embed(f7, f49);
  CHECK(e1.apply(f7.from_int(3)) == f49.from_int(3));

  Field f343 = Field::make(7, 3);
  auto e2 = embed(f7, f343);
  for (auto a : f7.elements()) CHECK(e2.apply(a) == f343.from_int(static_cast<std::int64_t>(a.v)));

  Field f9 = Field::make(3, 2), f81 = Field::make(3, 4);
  auto e3 = embed(f9, f81);
  // Generator image is a root of the source modulus.
  Elem g = e3.generator_image();
  Elem val = f81.zero();
  for (std::size_t k = f9.modulus().size(); k-- > 0;)
    val = f81.add(f81.mul(val, g), f81.from_int(static_cast<std::int64_t>(f9.modulus()[k])));
  CHECK(val == f81.zero());
  for (auto a : f9.elements())
    for (auto b : f9.elements()) {
      CHECK(e3.apply(f9.mul(a, b)) == f81.mul(e3.apply(a), e3.apply(b)));
      CHECK(e3.apply(f9.add(a, b)) == f81.add(e3.apply(a), e3.apply(b)));
    }

  try {
    (void)embed(Field::make(2, 2), Field::make(2, 3));
    FAIL("expected NotASubfield");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASubfield);
  }
}

TEST_CASE("embeddings are injective ring homomorphisms") {
  const std::pair<std::uint64_t, std::uint64_t> cases[] = {
      {2, 4}, {2, 8}, {4, 16}, {3, 9}, {3, 27}, {4, 64}, {8, 64}, {5, 25}, {9, 729}, {16, 256}};
  for (auto [qs, qt] : cases) {
    CAPTURE(qs);
    CAPTURE(qt);
    Field S = Field::of_order(qs), T = Field::of_order(qt);
    auto emb = embed(S, T);
    std::vector<bool> seen(T.q(), false);
    for (auto a : S.elements()) {
      Elem img = emb.apply(a);
      CHECK_FALSE(seen[img.v]);
      seen[img.v] = true;
      for (auto b : S.elements()) {
        CHECK(emb.apply(S.mul(a, b)) == T.mul(img, emb.apply(b)));
        CHECK(emb.apply(S.add(a, b)) == T.add(img, emb.apply(b)));
      }
    }
    CHECK(emb.apply(S.one()) == T.one());
  }
}
