#include "chowla2/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowla2 {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.field() != den_.field()) throw std::invalid_argument("field mismatch");
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(num_.field(), {1});
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  const FqElem lc_inv = den_.lc().inv();
  num_ = num_ * lc_inv;
  den_ = den_ * lc_inv;
}

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(num_.field(), {1}) {}

FqElem RatFun::constant_value() const {
  if (!is_constant()) throw std::domain_error("not a constant rational function");
  return num_.coeff(0);
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

bool RatFun::operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

std::optional<FqElem> RatFun::eval(const FqElem& t) const {
  const FqElem d = den_.eval(t);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(t) / d;
}

std::string RatFun::to_literal() const {
  if (den_.degree() == 0) return num_.to_literal();
  return num_.to_literal() + "/" + den_.to_literal();
}

std::string RatFun::pretty(char var) const {
  if (den_.degree() == 0) return num_.pretty(var);
  return "(" + num_.pretty(var) + ")/(" + den_.pretty(var) + ")";
}

RatFun RatFun::parse(const Field& f, const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return RatFun(Poly::parse(f, s));
  return RatFun(Poly::parse(f, s.substr(0, slash)), Poly::parse(f, s.substr(slash + 1)));
}

int PoleData::total_order() const {
  int t = at_infinity;
  for (const auto& [d, m] : finite) t += d.degree() * m;
  return t;
}

PoleData pole_decomposition(const RatFun& p, std::uint64_t seed) {
  PoleData out;
  if (p.den().degree() > 0)
    for (const auto& [d, m] : factor(p.den(), seed).factors) out.finite.emplace_back(d, m);
  out.at_infinity = std::max(0, p.num().degree() - p.den().degree());
  return out;
}

namespace {

Poly poly_pow(const Poly& b, int e) {
  Poly r(b.field(), {1});
  for (int i = 0; i < e; ++i) r = r * b;
  return r;
}

int order_at(const PoleData& pd, const Poly& place) {
  for (const auto& [d, m] : pd.finite)
    if (d == place) return m;
  return 0;
}

int compute_genus(const PoleData& pd) {
  int s = 0;
  for (const auto& [d, m] : pd.finite) s += d.degree() * (m + 1);
  if (pd.at_infinity > 0) s += pd.at_infinity + 1;
  if (s < 2 || s % 2 != 0) throw std::runtime_error("genus: bad pole-order sum");
  return (s - 2) / 2;
}

}  // namespace

ASReduction as_reduce(const RatFun& p, std::uint64_t seed) {
  const Field& fld = p.field();
  RatFun cur = p;
  RatFun q_shift = RatFun::zero(fld);

  for (int guard = 0;; ++guard) {
    if (guard > 4096) throw std::runtime_error("as_reduce failed to terminate");
    bool stepped = false;
    const PoleData pd = pole_decomposition(cur, seed);
    for (const auto& [place, m] : pd.finite) {
      if (m % 2 != 0) continue;
      // Leading residue class c of cur at the place, in F_q[t]/(place).
      const Poly dpow = poly_pow(place, m);
      const Poly w = cur.den().exact_div(dpow) % place;
      const std::uint64_t rq = static_cast<std::uint64_t>(1)
                               << (fld.degree() * static_cast<unsigned>(place.degree()));
      const Poly w_inv = poly_powmod(w, rq - 2, place);
      const Poly c = ((cur.num() % place) * w_inv) % place;
      // Unique square root in the residue field (perfect field of char 2).
      const Poly a = poly_powmod(c, rq >> 1, place);
      const RatFun step(a, poly_pow(place, m / 2));
      q_shift = q_shift + step;
      cur = cur + step * step + step;
      stepped = true;
      break;
    }
    if (!stepped && pd.at_infinity > 0 && pd.at_infinity % 2 == 0) {
      const FqElem lead = cur.num().lc();  // den is monic
      const RatFun step(Poly::monomial(lead.sqrt(), pd.at_infinity / 2));
      q_shift = q_shift + step;
      cur = cur + step * step + step;
      stepped = true;
    }
    if (!stepped) break;
  }

  ASReduction red{p, cur, q_shift, cur.is_constant(),
                  cur.is_constant() ? cur.constant_value() : fld.zero(),
                  pole_decomposition(cur, seed), -1};

  // Reduction invariants.
  if (!(red.p_tilde == p + q_shift * q_shift + q_shift))
    throw std::runtime_error("as_reduce: p~ != p + Q^2 + Q");
  const PoleData orig = pole_decomposition(p, seed);
  for (const auto& [place, m] : red.poles.finite) {
    const int m0 = order_at(orig, place);
    if (m0 == 0) throw std::runtime_error("as_reduce: new finite pole appeared");
    if (m > m0) throw std::runtime_error("as_reduce: pole order grew");
    if (m % 2 == 0) throw std::runtime_error("as_reduce: even pole order survived");
  }
  if (red.poles.at_infinity > orig.at_infinity)
    throw std::runtime_error("as_reduce: pole order grew at infinity");
  if (red.poles.at_infinity % 2 == 0 && red.poles.at_infinity != 0)
    throw std::runtime_error("as_reduce: even pole order survived at infinity");
  if (2 * q_shift.height() > p.height())
    throw std::runtime_error("as_reduce: ht(Q) > ht(p)/2");
  if (!red.degenerate) red.genus_value = compute_genus(red.poles);
  return red;
}

int genus(const ASReduction& red) {
  if (red.degenerate) throw std::domain_error("genus of a degenerate reduction");
  return red.genus_value;
}

bool genus_bound_check(const RatFun& p, std::uint64_t seed) {
  const PoleData pd = pole_decomposition(p, seed);
  int odd = pd.at_infinity % 2 != 0 ? 1 : 0;
  for (const auto& [d, m] : pd.finite)
    if (m % 2 != 0) ++odd;
  if (odd > 1)
    throw std::invalid_argument("genus_bound_check: more than one odd-order pole");
  const ASReduction red = as_reduce(p, seed);
  if (red.degenerate) throw std::invalid_argument("genus_bound_check: degenerate input");
  return 2 * red.genus_value <= p.height() - 1;
}

long long char_sum(const RatFun& p) {
  long long s = 0;
  const Field& fld = p.field();
  for (std::uint32_t b = 0; b < fld.size(); ++b) {
    const auto v = p.eval(fld.el(b));
    if (v) s += chi2(*v);
  }
  return s;
}

WeilReport weil_check(const RatFun& p, std::uint64_t seed) {
  WeilReport rep;
  const ASReduction red = as_reduce(p, seed);
  rep.degenerate = red.degenerate;
  rep.height_p = p.height();
  rep.height_q = red.q_shift.height();
  rep.sum_p = char_sum(p);
  if (red.degenerate) return rep;  // bound inapplicable
  rep.sum_ptilde = char_sum(red.p_tilde);
  rep.genus = red.genus_value;

  const long long q = p.field().size();
  const long long g = rep.genus;
  const long long s = std::llabs(rep.sum_ptilde);
  rep.weil_ok = s <= 1 || (s - 1) * (s - 1) <= 4 * g * g * q;
  rep.transfer_ok = std::llabs(rep.sum_p) <= s + rep.height_q;
  // 2 g sqrt(q) + 1 + ht(Q) <= ht sqrt(q) + ht/2 + 1, squared exactly.
  const long long ht = rep.height_p;
  const long long lhs = 2 * (ht - 2 * g);  // >= 0 when the bound can hold
  const long long rhs = 2 * rep.height_q - ht;
  rep.chain_ok = lhs >= 0 && (rhs <= 0 || lhs * lhs * q >= rhs * rhs);
  return rep;
}

std::pair<bool, FqElem> is_asp_degenerate(const RatFun& p, std::uint64_t seed) {
  const ASReduction red = as_reduce(p, seed);
  return {red.degenerate, red.degenerate ? red.constant : p.field().zero()};
}

}  // namespace chowla2
