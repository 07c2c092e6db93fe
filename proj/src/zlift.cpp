#include "chowla2/zlift.hpp"

#include <optional>
#include <stdexcept>

#include "chowla2/bareiss.hpp"

namespace chowla2 {

// ---------------------------------------------------------------- ZOrderElem

void ZOrderElem::reduce_and_trim() {
  const unsigned k = field_.degree();
  const std::uint32_t mod = field_.modulus();
  for (std::size_t i = c_.size(); i-- > k;) {
    if (c_[i] == 0) continue;
    const mpz_class t = c_[i];
    c_[i] = 0;
    for (unsigned j = 0; j < k; ++j)
      if (mod >> j & 1u) c_[i - k + j] -= t;
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZOrderElem::ZOrderElem(const Field& f, std::vector<mpz_class> coeffs)
    : field_(f), c_(std::move(coeffs)) {
  reduce_and_trim();
}

ZOrderElem ZOrderElem::from_int(const Field& f, long v) {
  return ZOrderElem(f, {mpz_class(v)});
}

static void check_same_field(const ZOrderElem& a, const ZOrderElem& b) {
  if (a.field() != b.field()) throw std::invalid_argument("order mismatch");
}

ZOrderElem ZOrderElem::operator+(const ZOrderElem& o) const {
  check_same_field(*this, o);
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return ZOrderElem(field_, std::move(v));
}

ZOrderElem ZOrderElem::operator-(const ZOrderElem& o) const {
  check_same_field(*this, o);
  std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return ZOrderElem(field_, std::move(v));
}

ZOrderElem ZOrderElem::operator-() const {
  std::vector<mpz_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return ZOrderElem(field_, std::move(v));
}

ZOrderElem ZOrderElem::operator*(const ZOrderElem& o) const {
  check_same_field(*this, o);
  if (is_zero() || o.is_zero()) return ZOrderElem(field_);
  std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return ZOrderElem(field_, std::move(v));
}

ZOrderElem ZOrderElem::mul_int(long s) const {
  if (s == 0 || is_zero()) return ZOrderElem(field_);
  std::vector<mpz_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return ZOrderElem(field_, std::move(v));
}

bool ZOrderElem::operator==(const ZOrderElem& o) const {
  check_same_field(*this, o);
  return c_ == o.c_;
}

bool ZOrderElem::divisible_by_4() const {
  for (const auto& c : c_)
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 4)) return false;
  return true;
}

ZOrderElem ZOrderElem::div_exact_4() const {
  if (!divisible_by_4()) throw std::runtime_error("order element not divisible by 4");
  std::vector<mpz_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    mpz_divexact_ui(v[i].get_mpz_t(), c_[i].get_mpz_t(), 4);
  return ZOrderElem(field_, std::move(v));
}

FqElem ZOrderElem::reduce_mod2() const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (mpz_odd_p(c_[i].get_mpz_t())) bits |= 1u << i;
  return field_.el(bits);
}

std::string ZOrderElem::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += c_[i].get_str();
    if (i >= 1) s += "*y";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

// Exact integer determinant (fraction-free elimination).
static mpz_class mpz_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return mpz_class(1);
  bool neg = false;
  mpz_class prev(1), q, r;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::size_t piv = j;
    while (piv < n && a[piv][j] == 0) ++piv;
    if (piv == n) return mpz_class(0);
    if (piv != j) {
      std::swap(a[piv], a[j]);
      neg = !neg;
    }
    for (std::size_t i = j + 1; i < n; ++i)
      for (std::size_t l = j + 1; l < n; ++l) {
        mpz_class t = a[j][j] * a[i][l] - a[i][j] * a[j][l];
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw std::runtime_error("mpz_det: inexact pivot division");
        a[i][l] = q;
      }
    prev = a[j][j];
  }
  return neg ? mpz_class(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

namespace {

// Solves d * e = c in the order, exactly, via the integer matrix of
// multiplication by d (Cramer with a precomputed adjugate; the matrix is
// nonsingular because the order is an integral domain).
class OrderDivider {
 public:
  explicit OrderDivider(const ZOrderElem& d) : d_(d), field_(d.field()) {
    if (d.is_zero()) throw std::domain_error("division by zero in the order");
    if (d.is_integer()) return;
    const unsigned k = field_.degree();
    const std::uint32_t mod = field_.modulus();
    std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k, mpz_class(0)));
    std::vector<mpz_class> cur(k, mpz_class(0));
    for (std::size_t i = 0; i < d.coeffs().size(); ++i) cur[i] = d.coeffs()[i];
    for (unsigned col = 0; col < k; ++col) {
      for (unsigned row = 0; row < k; ++row) m[row][col] = cur[row];
      if (col + 1 == k) break;
      const mpz_class top = cur[k - 1];
      for (unsigned i = k - 1; i >= 1; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (unsigned j = 0; j < k; ++j)
          if (mod >> j & 1u) cur[j] -= top;
    }
    det_ = mpz_det(m);
    if (det_ == 0) throw std::runtime_error("singular multiplication matrix in the order");
    adj_.assign(k, std::vector<mpz_class>(k));
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) {
        std::vector<std::vector<mpz_class>> minor;
        minor.reserve(k - 1);
        for (unsigned r = 0; r < k; ++r) {
          if (r == j) continue;
          std::vector<mpz_class> row;
          row.reserve(k - 1);
          for (unsigned c = 0; c < k; ++c)
            if (c != i) row.push_back(m[r][c]);
          minor.push_back(std::move(row));
        }
        mpz_class cof = mpz_det(std::move(minor));
        if ((i + j) & 1u) cof = -cof;
        adj_[i][j] = cof;  // adj * M = det * I
      }
  }

  ZOrderElem divide(const ZOrderElem& c) const {
    if (c.is_zero()) return ZOrderElem(field_);
    if (d_.is_integer()) {
      const mpz_class& dv = d_.coeffs()[0];
      std::vector<mpz_class> v(c.coeffs().size());
      mpz_class q, r;
      for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.coeffs()[i].get_mpz_t(), dv.get_mpz_t());
        if (r != 0) throw std::runtime_error("order division is not exact");
        v[i] = q;
      }
      return ZOrderElem(field_, std::move(v));
    }
    const unsigned k = field_.degree();
    std::vector<mpz_class> rhs(k, mpz_class(0));
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) rhs[i] = c.coeffs()[i];
    std::vector<mpz_class> v(k);
    mpz_class num, q, r;
    for (unsigned i = 0; i < k; ++i) {
      num = 0;
      for (unsigned j = 0; j < k; ++j) num += adj_[i][j] * rhs[j];
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), det_.get_mpz_t());
      if (r != 0) throw std::runtime_error("order division is not exact");
      v[i] = q;
    }
    ZOrderElem e(field_, std::move(v));
    if (!(d_ * e == c)) throw std::runtime_error("order division verification failed");
    return e;
  }

 private:
  ZOrderElem d_;
  Field field_;
  mpz_class det_;
  std::vector<std::vector<mpz_class>> adj_;
};

}  // namespace

ZOrderElem ZOrderElem::exact_div(const ZOrderElem& d) const {
  check_same_field(*this, d);
  return OrderDivider(d).divide(*this);
}

// --------------------------------------------------------------------- ZPoly

ZPoly::ZPoly(const Field& f, std::vector<ZOrderElem> coeffs) : field(f), c(std::move(coeffs)) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

ZOrderElem ZPoly::coeff(int i) const {
  if (i >= 0 && i < static_cast<int>(c.size())) return c[i];
  return ZOrderElem(field);
}

bool ZPoly::is_monic() const {
  return !c.empty() && c.back() == ZOrderElem::from_int(field, 1);
}

ZOrderElem lift(const FqElem& a) {
  std::vector<mpz_class> v;
  for (unsigned i = 0; i < a.field.degree(); ++i)
    v.push_back(mpz_class((a.bits >> i) & 1u));
  return ZOrderElem(a.field, std::move(v));
}

ZPoly lift_poly(const Poly& f) {
  std::vector<ZOrderElem> v;
  v.reserve(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) v.push_back(lift(f.coeff(i)));
  return ZPoly(f.field(), std::move(v));
}

ZPoly lift_poly_random(const Poly& f, std::mt19937_64& rng) {
  // Leading coefficient is lifted exactly so monic lifts stay monic; all
  // other y-coordinates get representatives in [0, 8) of the right parity.
  std::vector<ZOrderElem> v;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i == f.degree()) {
      v.push_back(lift(f.coeff(i)));
      break;
    }
    std::vector<mpz_class> cv;
    for (unsigned j = 0; j < f.field().degree(); ++j) {
      const long bit = (f.coeff_bits(i) >> j) & 1u;
      cv.push_back(mpz_class(bit + 2 * static_cast<long>(rng() % 4)));
    }
    v.push_back(ZOrderElem(f.field(), std::move(cv)));
  }
  return ZPoly(f.field(), std::move(v));
}

// ------------------------------------------------- t-polynomials over the order

namespace {

// Dense polynomial in the free constant term t with ZOrderElem coefficients.
struct ZT {
  Field field;
  std::vector<ZOrderElem> c;

  explicit ZT(const Field& f) : field(f) {}
  ZT(const Field& f, std::vector<ZOrderElem> v) : field(f), c(std::move(v)) { trim(); }
  static ZT constant(const ZOrderElem& e) { return ZT(e.field(), {e}); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const ZOrderElem& lc() const { return c.back(); }

  ZT operator+(const ZT& o) const {
    std::vector<ZOrderElem> v;
    v.reserve(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < std::max(c.size(), o.c.size()); ++i) {
      ZOrderElem s(field);
      if (i < c.size()) s = s + c[i];
      if (i < o.c.size()) s = s + o.c[i];
      v.push_back(std::move(s));
    }
    return ZT(field, std::move(v));
  }
  ZT operator-(const ZT& o) const {
    std::vector<ZOrderElem> v;
    v.reserve(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < std::max(c.size(), o.c.size()); ++i) {
      ZOrderElem s(field);
      if (i < c.size()) s = s + c[i];
      if (i < o.c.size()) s = s - o.c[i];
      v.push_back(std::move(s));
    }
    return ZT(field, std::move(v));
  }
  ZT operator-() const {
    std::vector<ZOrderElem> v;
    v.reserve(c.size());
    for (const auto& e : c) v.push_back(-e);
    return ZT(field, std::move(v));
  }
  ZT operator*(const ZT& o) const {
    if (is_zero() || o.is_zero()) return ZT(field);
    std::vector<ZOrderElem> v(c.size() + o.c.size() - 1, ZOrderElem(field));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c.size(); ++j)
        if (!o.c[j].is_zero()) v[i + j] = v[i + j] + c[i] * o.c[j];
    }
    return ZT(field, std::move(v));
  }
  ZT mul_int(long s) const {
    std::vector<ZOrderElem> v;
    v.reserve(c.size());
    for (const auto& e : c) v.push_back(e.mul_int(s));
    return ZT(field, std::move(v));
  }
};

// Exact long division in t; divisions of leading coefficients go through the
// shared divider for lc(v).
ZT zt_exact_div(const ZT& u, const ZT& v, const OrderDivider& lc_div) {
  if (v.is_zero()) throw std::domain_error("zt division by zero");
  if (u.is_zero()) return ZT(u.field);
  if (u.deg() < v.deg()) throw std::runtime_error("zt division is not exact (degree)");
  std::vector<ZOrderElem> rem = u.c;
  std::vector<ZOrderElem> quo(u.deg() - v.deg() + 1, ZOrderElem(u.field));
  for (int d = u.deg(); d >= v.deg(); --d) {
    if (rem[d].is_zero()) continue;
    ZOrderElem q = lc_div.divide(rem[d]);
    for (int j = 0; j < v.deg(); ++j)
      if (!v.c[j].is_zero()) rem[d - v.deg() + j] = rem[d - v.deg() + j] - q * v.c[j];
    rem[d] = ZOrderElem(u.field);
    quo[d - v.deg()] = std::move(q);
  }
  for (const auto& e : rem)
    if (!e.is_zero()) throw std::runtime_error("zt division is not exact (remainder)");
  return ZT(u.field, std::move(quo));
}

// Fraction-free determinant over t-polynomials, with the per-stage divider
// hoisted out of the inner loops.
ZT zt_det(std::vector<std::vector<ZT>> m, const Field& fld) {
  const std::size_t n = m.size();
  if (n == 0) return ZT::constant(ZOrderElem::from_int(fld, 1));
  bool neg = false;
  const ZT* prev = nullptr;
  std::optional<OrderDivider> div;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::size_t piv = j;
    while (piv < n && m[piv][j].is_zero()) ++piv;
    if (piv == n) return ZT(fld);
    if (piv != j) {
      std::swap(m[piv], m[j]);
      neg = !neg;
    }
    for (std::size_t i = j + 1; i < n; ++i) {
      for (std::size_t l = j + 1; l < n; ++l) {
        ZT t = m[j][j] * m[i][l] - m[i][j] * m[j][l];
        m[i][l] = prev ? zt_exact_div(t, *prev, *div) : std::move(t);
      }
    }
    prev = &m[j][j];
    div.emplace(prev->lc());
  }
  ZT det = std::move(m[n - 1][n - 1]);
  return neg ? -det : det;
}

int zt_vec_degree(const std::vector<ZT>& v) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

// Resultant of two x-polynomials with ZT coefficients (ascending).
ZT zt_res(const std::vector<ZT>& a, const std::vector<ZT>& b, const Field& fld) {
  const int da = zt_vec_degree(a), db = zt_vec_degree(b);
  if (da < 0 && db < 0) throw std::invalid_argument("resultant of two zero polynomials");
  if (da < 0 || db < 0) return ZT(fld);
  if (da == 0 && db == 0) return ZT::constant(ZOrderElem::from_int(fld, 1));
  std::vector<ZT> at(a.begin(), a.begin() + da + 1), bt(b.begin(), b.begin() + db + 1);
  return zt_det(sylvester_matrix<ZT>(at, da, bt, db, ZT(fld)), fld);
}

// disc(F) = (-1)^(n(n-1)/2) Res(F, F') for monic F of x-degree n.
ZT zt_disc(const std::vector<ZT>& f, const Field& fld) {
  const int n = zt_vec_degree(f);
  std::vector<ZT> fp;
  for (int i = 1; i <= n; ++i) fp.push_back(f[i].mul_int(i));
  ZT r = zt_res(f, fp, fld);
  return ((static_cast<long>(n) * (n - 1) / 2) & 1) ? -r : r;
}

// disc+(F) = Res(h, g)^2 for the even/odd split F(x) = g(x^2) + x h(x^2).
// The resultant is taken at the formal degrees fixed by the parity of n (the
// monic part anchors the Sylvester matrix, so this agrees with the actual-
// degree resultant whenever the other part is nonzero and specializes
// correctly when it vanishes).
ZT zt_disc_plus(const std::vector<ZT>& f, const Field& fld) {
  const int n = zt_vec_degree(f);
  const int dh = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  const int dg = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  if (dh < 0 || (dh == 0 && dg == 0)) {
    // n = 1: empty Sylvester matrix, resultant 1.
    return ZT::constant(ZOrderElem::from_int(fld, 1));
  }
  std::vector<ZT> g(dg + 1, ZT(fld)), h(dh + 1, ZT(fld));
  for (int i = 0; i <= n; i += 2) g[i / 2] = f[i];
  for (int i = 1; i <= n; i += 2) h[(i - 1) / 2] = f[i];
  ZT r = zt_det(sylvester_matrix<ZT>(h, dh, g, dg, ZT(fld)), fld);
  return r * r;
}

std::vector<ZT> zt_wrap(const ZPoly& f) {
  std::vector<ZT> v;
  v.reserve(f.c.size());
  for (const auto& e : f.c) v.push_back(ZT::constant(e));
  return v;
}

ZOrderElem zt_unwrap(const ZT& t) {
  if (t.deg() > 0) throw std::runtime_error("expected a constant t-polynomial");
  return t.is_zero() ? ZOrderElem(t.field) : t.c[0];
}

void require_monic(const ZPoly& f, const char* who) {
  if (f.degree() < 1 || !f.is_monic())
    throw std::invalid_argument(std::string(who) + ": monic input of degree >= 1 required");
}

}  // namespace

ZOrderElem z_resultant(const ZPoly& f, const ZPoly& g) {
  if (f.field != g.field) throw std::invalid_argument("order mismatch");
  return zt_unwrap(zt_res(zt_wrap(f), zt_wrap(g), f.field));
}

ZOrderElem disc0(const ZPoly& f) {
  require_monic(f, "disc0");
  return zt_unwrap(zt_disc(zt_wrap(f), f.field));
}

ZOrderElem disc_plus0(const ZPoly& f) {
  require_monic(f, "disc_plus0");
  return zt_unwrap(zt_disc_plus(zt_wrap(f), f.field));
}

ZOrderElem disc_plus0_reflection(const ZPoly& f) {
  require_monic(f, "disc_plus0_reflection");
  if (f.coeff(0).is_zero())
    throw std::invalid_argument("disc_plus0_reflection: nonzero constant term required");
  const int n = f.degree();
  std::vector<ZOrderElem> neg;
  neg.reserve(n + 1);
  for (int i = 0; i <= n; ++i) neg.push_back((i & 1) ? -f.coeff(i) : f.coeff(i));
  ZOrderElem r = z_resultant(f, ZPoly(f.field, std::move(neg)));
  mpz_class two_n = mpz_class(1) << n;
  r = OrderDivider(ZOrderElem(f.field, {two_n})).divide(r);
  return OrderDivider(f.coeff(0)).divide(r);
}

FqElem xi_of_lift(const ZPoly& f) {
  require_monic(f, "xi_of_lift");
  const ZOrderElem diff = disc_plus0(f) - disc0(f);
  if (!diff.divisible_by_4())
    throw std::runtime_error("disc+ - disc is not divisible by 4 (arithmetic bug)");
  return diff.div_exact_4().reduce_mod2();
}

FqElem xi(const Poly& f) {
  if (f.degree() < 1 || !f.is_monic())
    throw std::invalid_argument("xi: monic input of degree >= 1 required");
  return xi_of_lift(lift_poly(f));
}

FqElem delta(const Poly& f) {
  if (f.degree() < 1 || !f.is_monic())
    throw std::invalid_argument("delta: monic input of degree >= 1 required");
  const Field& fld = f.field();
  const int n = f.degree();
  const int dh = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  const int dg = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  if (dh < 0 || (dh == 0 && dg == 0)) return fld.one();
  std::vector<FqElem> g(dg + 1, fld.zero()), h(dh + 1, fld.zero());
  for (int i = 0; i <= n; i += 2) g[i / 2] = f.coeff(i);
  for (int i = 1; i <= n; i += 2) h[(i - 1) / 2] = f.coeff(i);
  return bareiss_det<FqElem>(sylvester_matrix<FqElem>(h, dh, g, dg, fld.zero()));
}

static void require_t_shape(const Poly& f, const char* who) {
  if (f.degree() < 1 || !f.is_monic() || f.coeff_bits(0) != 0)
    throw std::invalid_argument(std::string(who) +
                                ": monic input with zero constant term required");
}

Poly delta_poly_in_t(const Poly& f) {
  require_t_shape(f, "delta_poly_in_t");
  const Field& fld = f.field();
  const int n = f.degree();
  const int dh = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  const int dg = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  if (dh < 0 || (dh == 0 && dg == 0)) return Poly(fld, {1});
  std::vector<Poly> g(dg + 1, Poly(fld)), h(dh + 1, Poly(fld));
  g[0] = Poly(fld, {0, 1});  // the free constant term t
  for (int i = 2; i <= n; i += 2) g[i / 2] = Poly(fld, {f.coeff_bits(i)});
  for (int i = 1; i <= n; i += 2) h[(i - 1) / 2] = Poly(fld, {f.coeff_bits(i)});
  return bareiss_det<Poly>(sylvester_matrix<Poly>(h, dh, g, dg, Poly(fld)));
}

Poly xi_poly_in_t(const Poly& f) {
  require_t_shape(f, "xi_poly_in_t");
  const Field& fld = f.field();
  std::vector<ZT> F;
  F.reserve(f.degree() + 1);
  F.push_back(ZT(fld, {ZOrderElem(fld), ZOrderElem::from_int(fld, 1)}));  // t
  for (int i = 1; i <= f.degree(); ++i) F.push_back(ZT::constant(lift(f.coeff(i))));

  const ZT diff = zt_disc_plus(F, fld) - zt_disc(F, fld);
  std::vector<std::uint32_t> v(diff.c.size(), 0);
  for (std::size_t i = 0; i < diff.c.size(); ++i) {
    if (!diff.c[i].divisible_by_4())
      throw std::runtime_error("disc+ - disc is not divisible by 4 (arithmetic bug)");
    v[i] = diff.c[i].div_exact_4().reduce_mod2().bits;
  }
  return Poly(fld, std::move(v));
}

Poly xi_poly_in_t_interp(const Poly& f, unsigned max_bits) {
  require_t_shape(f, "xi_poly_in_t_interp");
  const Field& fld = f.field();
  const unsigned n = static_cast<unsigned>(f.degree());
  unsigned e = 1;
  while ((std::uint64_t(1) << (fld.degree() * e)) < n + 1) ++e;
  Extension ext(fld, e, max_bits);
  const Poly fe = embed_poly(f, ext);

  std::vector<std::pair<FqElem, FqElem>> pts;
  for (std::uint32_t b = 0; b <= n; ++b) {
    FqElem t0 = ext.ext().el(b);
    pts.emplace_back(t0, xi(fe.add_constant(t0)));
  }
  // Lagrange interpolation over the extension field.
  Poly acc(ext.ext());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Poly num(ext.ext(), {1});
    FqElem den = ext.ext().one();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      num = num * Poly(ext.ext(), {pts[j].first.bits, 1});
      den = den * (pts[i].first + pts[j].first);
    }
    acc = acc + num * (pts[i].second / den);
  }
  // Coefficients must descend to the base field.
  std::vector<std::uint32_t> v(acc.degree() + 1, 0);
  for (int i = 0; i <= acc.degree(); ++i) {
    auto b = ext.section(acc.coeff(i));
    if (!b) throw std::runtime_error("interpolated xi has a coefficient outside the base field");
    v[i] = b->bits;
  }
  return Poly(fld, std::move(v));
}

FqElem berl(const Poly& f) {
  if (f.degree() < 1 || !f.is_monic())
    throw std::invalid_argument("berl: monic input of degree >= 1 required");
  const FqElem d = delta(f);
  if (d.is_zero()) throw std::domain_error("Berl undefined: zero discriminant");
  return xi(f) / (d * d);
}

FqElem berl_from_roots(const Poly& f, const Extension& ext) {
  if (f.degree() < 1) throw std::invalid_argument("berl_from_roots: degree >= 1 required");
  if (f.degree() >= 2 && !is_squarefree(f))
    throw std::invalid_argument("berl_from_roots: squarefree input required");
  const auto roots = roots_in_extension(f, ext);
  FqElem sum = ext.ext().zero();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const FqElem num = roots[i] * roots[j];
      const FqElem den = roots[i] * roots[i] + roots[j] * roots[j];
      sum = sum + num / den;
    }
  auto b = ext.section(sum);
  if (!b) throw std::runtime_error("berl_from_roots: value escaped the base field");
  return *b;
}

FqElem berl_from_roots(const Poly& f, std::uint64_t seed, unsigned max_bits) {
  return berl_from_roots(f, Extension(f.field(), splitting_degree(f, seed), max_bits));
}

}  // namespace chowla2
