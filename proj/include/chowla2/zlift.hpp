#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chowla2/gf2k.hpp"
#include "chowla2/polyring.hpp"

// Characteristic-0 lifting and the Berlekamp discriminant.  The field
// F_{2^k} is lifted to the order Z[y]/(h) where h is the field modulus with
// coefficients read in {0,1} c Z; h is irreducible over Q because it is
// irreducible mod 2, so the order is an integral domain and all resultants
// are computed exactly by fraction-free elimination.

namespace chowla2 {

/// Element of Z[y]/(h): an integer-coefficient polynomial in y of degree < k.
class ZOrderElem {
 public:
  explicit ZOrderElem(const Field& f) : field_(f) {}
  ZOrderElem(const Field& f, std::vector<mpz_class> coeffs);
  static ZOrderElem from_int(const Field& f, long v);

  const Field& field() const { return field_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_integer() const { return c_.size() <= 1; }

  ZOrderElem operator+(const ZOrderElem& o) const;
  ZOrderElem operator-(const ZOrderElem& o) const;
  ZOrderElem operator-() const;
  ZOrderElem operator*(const ZOrderElem& o) const;
  ZOrderElem mul_int(long s) const;
  /// Exact division in the order (throws if the quotient is not integral).
  ZOrderElem exact_div(const ZOrderElem& d) const;
  bool operator==(const ZOrderElem& o) const;

  bool divisible_by_4() const;
  ZOrderElem div_exact_4() const;
  /// Reduction modulo 2 into F_{2^k} (bit i = parity of coefficient i).
  FqElem reduce_mod2() const;

  std::string to_string() const;  // decimal coefficients, for debug dumps

 private:
  Field field_;
  std::vector<mpz_class> c_;  // ascending in y, reduced mod h, trimmed
  void reduce_and_trim();
};

/// Dense polynomial over the order (ascending, trimmed).
struct ZPoly {
  explicit ZPoly(const Field& f) : field(f) {}
  ZPoly(const Field& f, std::vector<ZOrderElem> coeffs);

  Field field;
  std::vector<ZOrderElem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  ZOrderElem coeff(int i) const;
  bool is_monic() const;
};

ZOrderElem lift(const FqElem& a);
ZPoly lift_poly(const Poly& f);
/// Lift with random coefficient representatives in [0, 8) congruent to the
/// bit mod 2 (for lifting-independence checks).
ZPoly lift_poly_random(const Poly& f, std::mt19937_64& rng);

/// Exact resultant over the order via Sylvester matrix and fraction-free
/// elimination.  Zero if either argument is zero (both zero is an error).
ZOrderElem z_resultant(const ZPoly& f, const ZPoly& g);

/// disc f = (-1)^(n(n-1)/2) Res(f, f') for monic f of degree n >= 1.
ZOrderElem disc0(const ZPoly& f);

/// disc+ f = Res(h, g)^2 for the even/odd split f(x) = g(x^2) + x h(x^2).
ZOrderElem disc_plus0(const ZPoly& f);

/// disc+ via Res(f(x), f(-x)) / (2^n a_0) — alternative route used as a
/// cross-check; requires monic f with nonzero constant term.
ZOrderElem disc_plus0_reflection(const ZPoly& f);

/// xi = (disc+ - disc)/4 reduced mod 2; the difference is always divisible
/// by 4 (checked, a failure signals an arithmetic bug).
FqElem xi_of_lift(const ZPoly& f);
FqElem xi(const Poly& f);  // monic, degree >= 1

/// delta(f) = Res(h, g) over F_q for the split f = g(x^2) + x h(x^2);
/// delta^2 = disc f mod 2.
FqElem delta(const Poly& f);  // monic

// Symbolic versions in the free constant term t, for monic f of degree n
// with zero constant coefficient (the polynomial considered is f(x) + t).
Poly delta_poly_in_t(const Poly& f);
Poly xi_poly_in_t(const Poly& f);
/// Independent route for xi_f(t): evaluation at enough points of a large
/// enough extension field followed by interpolation.
Poly xi_poly_in_t_interp(const Poly& f, unsigned max_bits = kMaxFieldBits);

/// Berl(f) = xi(f) / delta(f)^2; throws std::domain_error ("Berl undefined")
/// when the discriminant vanishes.
FqElem berl(const Poly& f);

/// Berl from the root formula sum_{i<j} r_i r_j / (r_i^2 + r_j^2), evaluated
/// in an extension containing the splitting field; the independent oracle
/// for berl().  Accepts nonmonic squarefree inputs.
FqElem berl_from_roots(const Poly& f, const Extension& ext);
FqElem berl_from_roots(const Poly& f, std::uint64_t seed = 1,
                       unsigned max_bits = kMaxFieldBits);

}  // namespace chowla2
