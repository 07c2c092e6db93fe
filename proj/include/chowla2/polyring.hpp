#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chowla2/gf2k.hpp"

// Dense univariate polynomials over F_{2^k}: ring arithmetic, gcd,
// resultants, squarefree testing, factorization and the Mobius function.

namespace chowla2 {

class Poly {
 public:
  explicit Poly(const Field& f) : field_(f) {}
  Poly(const Field& f, std::vector<std::uint32_t> coeff_bits);
  static Poly constant(const FqElem& c);
  static Poly monomial(const FqElem& c, unsigned e);
  /// The polynomial x over f.
  static Poly x(const Field& f) { return Poly(f, {0, 1}); }

  const Field& field() const { return field_; }
  /// Degree; -1 stands in for the -infinity degree of the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::uint32_t coeff_bits(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0u;
  }
  FqElem coeff(int i) const { return field_.el(coeff_bits(i)); }
  FqElem lc() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1u; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const { return *this + o; }
  Poly operator-() const { return *this; }
  Poly operator*(const Poly& o) const;
  Poly operator*(const FqElem& s) const;
  std::pair<Poly, Poly> divmod(const Poly& g) const;
  Poly operator/(const Poly& g) const { return divmod(g).first; }
  Poly operator%(const Poly& g) const { return divmod(g).second; }
  /// Quotient, asserting that the division is exact.
  Poly exact_div(const Poly& g) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly monic() const;
  FqElem eval(const FqElem& t) const;
  Poly derivative() const;
  Poly compose(const Poly& g) const;
  /// f + c: adds c to the constant term.
  Poly add_constant(const FqElem& c) const;
  /// f(t + c), the Taylor shift of the variable.
  Poly shift_var(const FqElem& c) const;

  std::string to_literal() const;            // "0x1,0x0,0x1"
  std::string pretty(char var = 'x') const;  // "x^2 + 1"
  /// Accepts both the comma literal and the pretty form.
  static Poly parse(const Field& f, const std::string& s);

 private:
  Field field_;
  std::vector<std::uint32_t> c_;  // ascending, no trailing zeros
  void trim();
};

Poly gcd(const Poly& a, const Poly& b);  // monic (or zero)

/// Resultant by the Euclidean remainder chain; signs are trivial in
/// characteristic 2.  Res(f, g) = 0 when either argument is the zero
/// polynomial (both zero is an error).
FqElem resultant(const Poly& f, const Poly& g);

bool is_squarefree(const Poly& f);  // requires deg f >= 1

/// Mobius function: 0 if not squarefree, else (-1)^r with r the number of
/// distinct monic irreducible factors; +1 on nonzero constants.  r is
/// computed as the dimension of the kernel of (Frobenius - id) acting on
/// F_q[x]/(f), without factoring.
int mobius(const Poly& f);

struct Factorization {
  FqElem unit;
  std::vector<std::pair<Poly, int>> factors;  // (monic irreducible, multiplicity)
  Poly product() const;
};

/// Complete factorization into monic irreducibles; deterministic for a given
/// seed (equal-degree splitting draws from a seeded generator).
Factorization factor(const Poly& f, std::uint64_t seed = 1);

bool is_irreducible(const Poly& f);

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod);

/// For f with f' = 0 (so f = g^2 in characteristic 2), returns g.
Poly poly_sqrt(const Poly& f);

/// Least e such that F_{q^e} contains the splitting field of f.
unsigned splitting_degree(const Poly& f, std::uint64_t seed = 1);

/// All deg(f) roots of f in the extension, with multiplicity.  The extension
/// degree must be divisible by every irreducible-factor degree of f.
std::vector<FqElem> roots_in_extension(const Poly& f, const Extension& ext);

/// Coefficient-wise embedding of f into the extension field.
Poly embed_poly(const Poly& f, const Extension& ext);

}  // namespace chowla2
