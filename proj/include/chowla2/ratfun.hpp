#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowla2/polyring.hpp"

// Rational functions over F_q(t), Artin-Schreier reduction (removal of
// even-order pole parts by translations y -> y + Q), genus of y^2 + y = p,
// and character sums with the chi2(pole) = 0 convention.

namespace chowla2 {

class RatFun {
 public:
  /// Normalizes to coprime numerator/denominator with monic denominator.
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly num);
  static RatFun zero(const Field& f) { return RatFun(Poly(f)); }
  static RatFun constant(const FqElem& c) { return RatFun(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  FqElem constant_value() const;
  /// max(deg num, deg den) = total pole order including infinity.
  int height() const { return std::max(std::max(num_.degree(), den_.degree()), 0); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  bool operator==(const RatFun& o) const;
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  /// nullopt at poles of p.
  std::optional<FqElem> eval(const FqElem& t) const;

  std::string to_literal() const;
  std::string pretty(char var = 't') const;
  static RatFun parse(const Field& f, const std::string& s);

 private:
  Poly num_, den_;
};

struct PoleData {
  std::vector<std::pair<Poly, int>> finite;  // (monic irreducible place, order >= 1)
  int at_infinity = 0;
  /// Total geometric pole order: sum deg(place)*order + infinity order.
  int total_order() const;
};

PoleData pole_decomposition(const RatFun& p, std::uint64_t seed = 1);

/// Result of reducing y^2 + y = p to a curve whose pole orders are all odd.
/// Invariants (checked on construction): p_tilde = p + q_shift^2 + q_shift;
/// poles of p_tilde are poles of p with no larger, odd orders; and
/// 2 ht(q_shift) <= ht(p).
struct ASReduction {
  RatFun p, p_tilde, q_shift;
  bool degenerate;   // p_tilde is a constant
  FqElem constant;   // its value (meaningful iff degenerate)
  PoleData poles;    // poles of p_tilde
  int genus_value;   // -1 when degenerate
};

ASReduction as_reduce(const RatFun& p, std::uint64_t seed = 1);

/// Genus of the reduced curve; throws on degenerate reductions.
int genus(const ASReduction& red);

/// For p with at most one odd-order pole and non-degenerate reduction:
/// checks 2 g <= ht(p) - 1.
bool genus_bound_check(const RatFun& p, std::uint64_t seed = 1);

/// sum over t in F_q of chi2(p(t)), with poles contributing 0.
long long char_sum(const RatFun& p);

struct WeilReport {
  bool degenerate = false;
  long long sum_p = 0;
  long long sum_ptilde = 0;
  int genus = -1;
  int height_p = 0;
  int height_q = 0;
  bool weil_ok = false;      // |sum p~| <= 2 g sqrt(q) + 1
  bool transfer_ok = false;  // |sum p| <= |sum p~| + ht(Q)
  bool chain_ok = false;     // 2 g sqrt(q) + 1 + ht(Q) <= ht sqrt(q) + ht/2 + 1
};

WeilReport weil_check(const RatFun& p, std::uint64_t seed = 1);

/// True (with the constant) iff p = H^2 + H + c for some rational H.
std::pair<bool, FqElem> is_asp_degenerate(const RatFun& p, std::uint64_t seed = 1);

}  // namespace chowla2
