#include <doctest.h>

#include <set>

#include "chowla2/gf2k.hpp"

using namespace chowla2;

TEST_CASE("field construction and moduli") {
  CHECK(Field::default_modulus(1) == 0x2u);
  CHECK(Field::default_modulus(2) == 0x7u);
  CHECK(Field::default_modulus(3) == 0xbu);
  CHECK(Field::default_modulus(4) == 0x13u);
  CHECK_THROWS_AS(Field(2, 0x6), std::invalid_argument);   // y^2 + y
  CHECK_THROWS_AS(Field(4, 0x11), std::invalid_argument);  // (y+1)^4
  CHECK_THROWS_AS(Field(0), std::invalid_argument);
  CHECK_THROWS_AS(Field(17), std::invalid_argument);

  const Field f = parse_field("k=3,mod=0xb");
  CHECK(f.to_string() == "k=3,mod=0xb");
  CHECK(parse_field("k=4").modulus() == 0x13u);
  CHECK(parse_elem(f, "0x5").bits == 5u);
  CHECK_THROWS(parse_elem(f, "0x9"));
}

TEST_CASE("additive structure") {
  for (unsigned k : {1u, 2u, 3u}) {
    const Field f(k);
    for (const FqElem& a : enumerate_field(f)) {
      CHECK((a + a).is_zero());
      CHECK(a + f.zero() == a);
    }
  }
  const Field f2(1);
  CHECK((f2.one() + f2.one()).is_zero());
}

TEST_CASE("multiplicative structure") {
  const Field f4(2);
  const FqElem w = f4.gen();
  CHECK(w * w == w + f4.one());  // y^2 = y + 1 mod y^2+y+1
  for (unsigned k : {1u, 2u, 3u, 4u}) {
    const Field f(k);
    for (const FqElem& a : enumerate_field(f)) {
      CHECK(a * f.one() == a);
      if (!a.is_zero()) {
        CHECK(a * a.inv() == f.one());
        CHECK(a / a == f.one());
      }
    }
  }
  CHECK_THROWS_AS(f4.zero().inv(), std::domain_error);
}

TEST_CASE("trace and chi2") {
  const Field f2(1), f4(2);
  CHECK(f2.zero().trace() == 0);
  CHECK(f2.one().trace() == 1);
  CHECK(f4.gen().trace() == 1);  // w + w^2 = 1

  CHECK(chi2(f2.zero()) == 1);
  CHECK(chi2(f2.one()) == -1);
  CHECK(chi2(f4.gen()) == -1);
  CHECK(chi2(f4.one()) == 1);

  for (unsigned k : {1u, 2u, 3u, 4u}) {
    const Field f(k);
    // Direct image of y -> y^2 + y as the independent oracle for chi2.
    std::set<std::uint32_t> image;
    for (const FqElem& y : enumerate_field(f)) image.insert((y * y + y).bits);
    std::size_t plus = 0;
    for (const FqElem& a : enumerate_field(f)) {
      const bool in_image = image.count(a.bits) > 0;
      CHECK(chi2(a) == (in_image ? 1 : -1));
      CHECK((a.trace() == 0) == in_image);
      if (chi2(a) == 1) ++plus;
      CHECK(chi2(a * a + a) == 1);
      for (const FqElem& b : enumerate_field(f)) CHECK(chi2(a) * chi2(b) == chi2(a + b));
    }
    CHECK(plus * 2 == f.size());  // the image has index 2
  }
}

TEST_CASE("square roots") {
  const Field f4(2);
  CHECK(f4.zero().sqrt() == f4.zero());
  CHECK(f4.one().sqrt() == f4.one());
  CHECK(f4.gen().sqrt() == f4.gen() * f4.gen());  // sqrt(w) = w^2
  for (unsigned k : {1u, 2u, 3u, 4u, 5u}) {
    const Field f(k);
    std::set<std::uint32_t> seen;
    for (const FqElem& a : enumerate_field(f)) {
      const FqElem s = a.sqrt();
      CHECK(s * s == a);
      seen.insert(s.bits);
    }
    CHECK(seen.size() == f.size());  // bijection
  }
}

TEST_CASE("field enumeration is lexicographic") {
  const Field f(3);
  const auto all = enumerate_field(f);
  REQUIRE(all.size() == 8);
  for (std::uint32_t i = 0; i < 8; ++i) CHECK(all[i].bits == i);
}

TEST_CASE("extensions") {
  const Field f2(1), f4(2);

  const Extension id(f4, 1);
  for (const FqElem& a : enumerate_field(f4)) CHECK(id.embed(a) == a);

  const Extension e24(f2, 2);
  CHECK(e24.embed(f2.one()).is_one());

  const Extension e416(f4, 2);
  const FqElem w16 = e416.embed(f4.gen());
  CHECK((w16 * w16 + w16 + e416.ext().one()).is_zero());  // root of y^2+y+1

  // Ring homomorphism, exhaustively.
  for (const FqElem& a : enumerate_field(f4))
    for (const FqElem& b : enumerate_field(f4)) {
      CHECK(e416.embed(a + b) == e416.embed(a) + e416.embed(b));
      CHECK(e416.embed(a * b) == e416.embed(a) * e416.embed(b));
    }

  // Section: exactly q elements of the big field are in the image.
  std::size_t hits = 0;
  for (const FqElem& x : enumerate_field(e416.ext()))
    if (e416.section(x)) ++hits;
  CHECK(hits == f4.size());

  // Sampled homomorphism pairs at the cap: F_256 into F_65536.
  const Field f256(8);
  const Extension big(f256, 2);
  std::uint32_t s = 1;
  for (int i = 0; i < 64; ++i) {
    s = s * 2654435761u + 1;
    const FqElem a = f256.el(s % 256), b = f256.el((s >> 8) % 256);
    CHECK(big.embed(a * b) == big.embed(a) * big.embed(b));
    CHECK(big.embed(a + b) == big.embed(a) + big.embed(b));
  }

  CHECK_THROWS_AS(Extension(f4, 9), std::invalid_argument);  // over the cap
}

TEST_CASE("field mismatch is rejected") {
  const Field a(2), b(3);
  CHECK_THROWS_AS(a.one() + b.one(), std::invalid_argument);
  const Field c(2, 0x7);
  CHECK((a.one() + c.one()).is_zero());  // same field, different handle
}
