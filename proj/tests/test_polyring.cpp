#include <doctest.h>

#include <random>

#include "chowla2/bareiss.hpp"
#include "chowla2/polyring.hpp"

using namespace chowla2;

namespace {

Poly rnd_poly(const Field& f, std::mt19937_64& rng, int dmax) {
  std::vector<std::uint32_t> c(1 + rng() % (dmax + 1));
  for (auto& b : c) b = static_cast<std::uint32_t>(rng() % f.size());
  return Poly(f, std::move(c));
}

int mobius_from_factor(const Poly& f) {
  const Factorization fac = factor(f);
  for (const auto& [p, m] : fac.factors)
    if (m > 1) return 0;
  return fac.factors.size() % 2 ? -1 : 1;
}

FqElem resultant_sylvester(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  if (a.degree() == 0 && b.degree() == 0) return f.one();
  std::vector<FqElem> av, bv;
  for (int i = 0; i <= a.degree(); ++i) av.push_back(a.coeff(i));
  for (int i = 0; i <= b.degree(); ++i) bv.push_back(b.coeff(i));
  return bareiss_det<FqElem>(
      sylvester_matrix<FqElem>(av, a.degree(), bv, b.degree(), f.zero()));
}

}  // namespace

TEST_CASE("parsing and printing") {
  const Field f2(1), f4(2);
  CHECK(Poly::parse(f2, "0x1,0x0,0x1").pretty() == "x^2 + 1");
  CHECK(Poly::parse(f2, "x^2+x+1").to_literal() == "0x1,0x1,0x1");
  CHECK(Poly::parse(f4, "0x3*x^2 + x + 0x2").coeff_bits(2) == 3u);
  CHECK(Poly::parse(f4, "0x3").degree() == 0);
  CHECK(Poly::parse(f2, "t^3 + t").degree() == 3);
  CHECK(Poly::parse(f2, "0").is_zero());
  CHECK_THROWS(Poly::parse(f2, "x^2 + q2"));
  const Poly p = Poly::parse(f4, "0x2,0x0,0x3,0x1");
  CHECK(Poly::parse(f4, p.pretty()) == p);
}

TEST_CASE("ring basics") {
  const Field f2(1);
  const Poly x = Poly::x(f2);
  const Poly f = x * x * x + x;  // x^3 + x
  auto [q, r] = f.divmod(x * x);
  CHECK(q == x);
  CHECK(r == x);
  CHECK_THROWS_AS(f.divmod(Poly(f2)), std::domain_error);

  // Euclidean contract on random pairs.
  std::mt19937_64 rng(2);
  const Field f16(4);
  for (int i = 0; i < 50; ++i) {
    const Poly a = rnd_poly(f16, rng, 6), b = rnd_poly(f16, rng, 4);
    if (b.is_zero()) continue;
    auto [qq, rr] = a.divmod(b);
    CHECK(a == qq * b + rr);
    CHECK(rr.degree() < b.degree());
  }
  CHECK(Poly::parse(Field(5), "0x1a").coeff_bits(0) == 0x1au);

  CHECK(gcd(f, Poly(f2)) == f.monic());
  const Poly sq = Poly::parse(f2, "x^2+1");  // (x+1)^2
  CHECK(sq.derivative().is_zero());
  CHECK_FALSE(is_squarefree(sq));
  CHECK(poly_sqrt(sq) == Poly::parse(f2, "x+1"));
  CHECK(is_squarefree(Poly::parse(f2, "x^2+x+1")));
  CHECK(is_squarefree(Poly::parse(f2, "x^2+x")));
  CHECK_FALSE(is_squarefree(Poly::parse(f2, "x^2")));
}

TEST_CASE("derivative in characteristic 2") {
  const Field f4(2);
  const FqElem a = f4.gen();
  // d/dx (x^3 + a x^2 + c) = 3x^2 + 2ax = x^2
  Poly f = Poly::monomial(f4.one(), 3) + Poly::monomial(a, 2) + Poly::constant(f4.el(3));
  CHECK(f.derivative() == Poly::monomial(f4.one(), 2));
  // d/dt (t^2 + a^3 t) = a^3
  Poly g = Poly::monomial(f4.one(), 2) + Poly::monomial(a.pow(3), 1);
  CHECK(g.derivative() == Poly::constant(a.pow(3)));
}

TEST_CASE("evaluation, composition, shifts") {
  const Field f4(2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Poly f = rnd_poly(f4, rng, 5);
    const FqElem c = f4.el(static_cast<std::uint32_t>(rng() % 4));
    const Poly sh = f.shift_var(c);
    for (const FqElem& t : enumerate_field(f4)) CHECK(sh.eval(t) == f.eval(t + c));
    CHECK(f.add_constant(c).eval(c) == f.eval(c) + c);
  }
}

TEST_CASE("resultants") {
  const Field f2(1), f4(2);
  std::mt19937_64 rng(7);

  // Res(x, g) = g(0)
  for (int i = 0; i < 20; ++i) {
    const Poly g = rnd_poly(f4, rng, 4);
    if (g.is_zero()) continue;
    CHECK(resultant(Poly::x(f4), g) == g.eval(f4.zero()));
  }

  // Res(x^m, a x + t) = t^m
  for (const FqElem& a : enumerate_field(f4))
    for (const FqElem& t : enumerate_field(f4)) {
      if (a.is_zero() && t.is_zero()) continue;
      const Poly xm = Poly::monomial(f4.one(), 3);
      const Poly lin = Poly::monomial(a, 1) + Poly::constant(t);
      CHECK(resultant(xm, lin) == t.pow(3));
    }

  // Zero detection matches the gcd oracle; symmetry; multiplicativity;
  // agreement with the Sylvester-determinant route.
  for (const Field& f : {f2, f4}) {
    for (int i = 0; i < 120; ++i) {
      Poly a = rnd_poly(f, rng, 4), b = rnd_poly(f, rng, 4), c = rnd_poly(f, rng, 3);
      if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
      const FqElem r = resultant(a, b);
      CHECK(r.is_zero() == (gcd(a, b).degree() > 0));
      CHECK(r == resultant(b, a));
      CHECK(resultant(a, b * c) == r * resultant(a, c));
      CHECK(r == resultant_sylvester(a, b));
    }
  }
  CHECK_THROWS_AS(resultant(Poly(f2), Poly(f2)), std::invalid_argument);
}

TEST_CASE("mobius") {
  const Field f2(1), f4(2);
  CHECK(mobius(Poly::parse(f2, "x^2+x+1")) == -1);
  CHECK(mobius(Poly::parse(f2, "x^2")) == 0);
  CHECK(mobius(Poly::parse(f2, "x^2+x")) == 1);
  CHECK(mobius(Poly::parse(f2, "1")) == 1);
  CHECK_THROWS_AS(mobius(Poly(f2)), std::invalid_argument);

  // Berlekamp-dimension route agrees with full factorization, exhaustively.
  for (const Field& f : {f2, f4}) {
    const unsigned max_n = 5;
    for (unsigned n = 1; n <= max_n; ++n) {
      std::vector<std::uint32_t> c(n + 1, 0);
      c[n] = 1;
      while (true) {
        CHECK(mobius(Poly(f, c)) == mobius_from_factor(Poly(f, c)));
        unsigned i = 0;
        while (i < n && ++c[i] == f.size()) c[i++] = 0;
        if (i == n) break;
      }
    }
  }

  // sum over monic F of degree n of mu(F) = 0 for n >= 2.
  for (const Field& f : {f2, f4})
    for (unsigned n = 2; n <= 4; ++n) {
      long long sum = 0;
      std::vector<std::uint32_t> c(n + 1, 0);
      c[n] = 1;
      while (true) {
        sum += mobius(Poly(f, c));
        unsigned i = 0;
        while (i < n && ++c[i] == f.size()) c[i++] = 0;
        if (i == n) break;
      }
      CHECK(sum == 0);
    }
}

TEST_CASE("factorization") {
  const Field f2(1), f4(2);
  const Factorization a = factor(Poly::parse(f2, "x^2+x"));
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].first == Poly::parse(f2, "x"));
  CHECK(a.factors[1].first == Poly::parse(f2, "x+1"));

  const Factorization b = factor(Poly::parse(f2, "x^4+x"));
  REQUIRE(b.factors.size() == 3);
  CHECK(b.factors[2].first == Poly::parse(f2, "x^2+x+1"));

  const Factorization c = factor(Poly::parse(f4, "0x2*x + 0x2"));
  CHECK(c.unit == f4.gen());
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].first == Poly::parse(f4, "x+1"));

  std::mt19937_64 rng(11);
  for (const Field& f : {f2, f4})
    for (int i = 0; i < 60; ++i) {
      const Poly p = rnd_poly(f, rng, 7);
      if (p.is_zero()) continue;
      const Factorization fac = factor(p, 123);
      CHECK(fac.product() == p);
      for (const auto& [q, m] : fac.factors) {
        CHECK(q.is_monic());
        CHECK(is_irreducible(q));
        CHECK(m >= 1);
      }
    }
  CHECK(is_irreducible(Poly::parse(f2, "x^3+x+1")));
  CHECK_FALSE(is_irreducible(Poly::parse(f2, "x^3+1")));
}

TEST_CASE("roots in extensions") {
  const Field f2(1);
  const Extension e(f2, 2);
  const auto roots = roots_in_extension(Poly::parse(f2, "x^2+x+1"), e);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].bits == 2u);  // w
  CHECK(roots[1].bits == 3u);  // w^2 = w + 1

  const Extension id(f2, 1);
  const auto r01 = roots_in_extension(Poly::parse(f2, "x^2+x"), id);
  REQUIRE(r01.size() == 2);
  CHECK(r01[0].is_zero());
  CHECK(r01[1].is_one());

  const auto dbl = roots_in_extension(Poly::parse(f2, "x^2"), id);
  REQUIRE(dbl.size() == 2);
  CHECK(dbl[0].is_zero());
  CHECK(dbl[1].is_zero());

  CHECK_THROWS_AS(roots_in_extension(Poly::parse(f2, "x^2+x+1"), id), std::invalid_argument);
  CHECK(splitting_degree(Poly::parse(f2, "x^4+x")) == 2);
}
