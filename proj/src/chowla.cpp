#include "chowla2/chowla.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace chowla2 {

void for_each_point(const Field& field, unsigned m,
                    const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> a(m, 0);
  const std::uint32_t q = field.size();
  while (true) {
    fn(a);
    unsigned i = 0;
    while (i < m && ++a[i] == q) {
      a[i] = 0;
      ++i;
    }
    if (i == m) break;
  }
}

Poly poly_from_point(const Field& field, unsigned n, const std::vector<std::uint32_t>& a) {
  if (a.size() + 1 != n) throw std::invalid_argument("point has the wrong dimension");
  std::vector<std::uint32_t> c(n + 1, 0);
  for (unsigned i = 0; i < a.size(); ++i) c[i + 1] = a[i];
  c[n] = 1;
  return Poly(field, std::move(c));
}

std::pair<Poly, Poly> shifted_delta_xi(const Poly& f, const Poly& alpha) {
  const Poly g_full = f + alpha;
  const FqElem c = g_full.coeff(0);
  const Poly g0 = g_full.add_constant(c);  // clears the constant term
  return {delta_poly_in_t(g0).shift_var(c), xi_poly_in_t(g0).shift_var(c)};
}

CorrelationSpec::CorrelationSpec(const Field& f, unsigned n_, std::vector<Poly> a,
                                 std::vector<int> e)
    : field(f), n(n_), alphas(std::move(a)), eps(std::move(e)) {
  if (n < 1) throw std::invalid_argument("correlation degree must be >= 1");
  if (alphas.empty()) throw std::invalid_argument("at least one shift required");
  if (alphas.size() != eps.size()) throw std::invalid_argument("alphas/eps size mismatch");
  for (const Poly& al : alphas) {
    if (al.field() != field) throw std::invalid_argument("field mismatch");
    if (al.degree() >= static_cast<int>(n))
      throw std::invalid_argument("shift degree must be < n");
  }
  for (int x : eps)
    if (x != 1 && x != 2) throw std::invalid_argument("eps entries must be 1 or 2");
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j]) throw std::invalid_argument("shifts must be distinct");
}

unsigned CorrelationSpec::r_odd() const {
  unsigned c = 0;
  for (int x : eps)
    if (x == 1) ++c;
  return c;
}

long long autocorrelation_bruteforce(const CorrelationSpec& spec) {
  long long sum = 0;
  for_each_point(spec.field, spec.n, [&](const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> v(c);
    v.push_back(1);
    const Poly F(spec.field, std::move(v));
    long long prod = 1;
    for (std::size_t j = 0; j < spec.alphas.size() && prod != 0; ++j) {
      int m = mobius(F + spec.alphas[j]);
      if (spec.eps[j] == 2) m = m * m;
      prod *= m;
    }
    sum += prod;
  });
  return sum;
}

long long autocorrelation_charsum(const CorrelationSpec& spec) {
  if (!spec.not_all_even())
    throw std::invalid_argument("character-sum form requires some eps = 1");
  const Field& fld = spec.field;
  long long total = 0;
  for_each_point(fld, spec.n - 1, [&](const std::vector<std::uint32_t>& a) {
    const Poly f = poly_from_point(fld, spec.n, a);
    std::vector<Poly> deltas, xis;
    for (const Poly& al : spec.alphas) {
      auto [d, x] = shifted_delta_xi(f, al);
      deltas.push_back(std::move(d));
      xis.push_back(std::move(x));
    }
    for (std::uint32_t tb = 0; tb < fld.size(); ++tb) {
      const FqElem t0 = fld.el(tb);
      bool pole = false;
      for (const Poly& d : deltas)
        if (d.eval(t0).is_zero()) {
          pole = true;  // some shift is non-squarefree at this fiber point
          break;
        }
      if (pole) continue;
      FqElem s = fld.zero();
      for (std::size_t j = 0; j < spec.alphas.size(); ++j) {
        if (spec.eps[j] != 1) continue;
        const FqElem dv = deltas[j].eval(t0);
        s = s + xis[j].eval(t0) / (dv * dv);
      }
      total += chi2(s);
    }
  });
  const bool negate = (static_cast<unsigned long long>(spec.n) * spec.r_odd()) & 1ull;
  return negate ? -total : total;
}

double theorem_bound(std::uint32_t q, unsigned n, unsigned r) {
  const double qd = static_cast<double>(q);
  return r * n * std::pow(qd, n - 0.5) + 0.75 * (r + 3.0) * n * n * std::pow(qd, n - 1.0);
}

bool theorem_bound_holds(long long C, std::uint32_t q, unsigned n, unsigned r) {
  if (n * std::log2(static_cast<double>(q)) > 50)
    throw std::invalid_argument("theorem_bound_holds: range too large for exact check");
  using i128 = __int128;
  i128 qn1 = 1;
  for (unsigned i = 0; i + 1 < n; ++i) qn1 *= q;
  const i128 absC = C < 0 ? -static_cast<i128>(C) : static_cast<i128>(C);
  const i128 L = 4 * absC - 3 * static_cast<i128>(r + 3) * n * n * qn1;
  if (L <= 0) return true;
  const i128 R = 16 * static_cast<i128>(r) * r * n * n * qn1 * qn1 * q;
  return L * L <= R;
}

N2Classification n2_classify(const CorrelationSpec& spec) {
  if (spec.n != 2) throw std::invalid_argument("n2_classify requires n = 2");
  const Field& fld = spec.field;
  N2Classification out{{}, {}, {}, {}, {}, N2Case::kFullCorrelation, 0, false};

  std::map<std::uint32_t, std::uint32_t> b_of;  // a bits -> b_a bits
  std::map<std::uint32_t, int> gamma_of;
  for (std::size_t i = 0; i < spec.alphas.size(); ++i) {
    const std::uint32_t ai = spec.alphas[i].coeff_bits(1);
    const std::uint32_t bi = spec.alphas[i].coeff_bits(0);
    std::uint32_t& slot = b_of[ai];       // register a in A even when eps = 2
    if (spec.eps[i] == 1) slot ^= bi;     // eps = 2 contributes 2 b = 0
    gamma_of[ai] = (gamma_of[ai] + spec.eps[i]) % 2;
  }
  for (const auto& [a, b] : b_of) {
    out.A.push_back(fld.el(a));
    out.b.emplace_back(fld.el(a), fld.el(b));
    out.gamma.emplace_back(fld.el(a), gamma_of[a]);
    if (b != 0) out.A_b.push_back(fld.el(a));
    if (gamma_of[a] != 0) out.A_gamma.push_back(fld.el(a));
  }

  out.C = autocorrelation_bruteforce(spec);
  const long long q = fld.size();
  const long long r = static_cast<long long>(spec.r());
  if (!out.A_gamma.empty()) {
    out.which = N2Case::kGammaNonEmpty;
    out.relation_ok = std::llabs(out.C) < r * q;
  } else if (!out.A_b.empty()) {
    out.which = N2Case::kBNonEmpty;
    out.relation_ok = out.C * out.C < r * r * q * q * q;
  } else {
    out.which = N2Case::kFullCorrelation;
    out.relation_ok = out.C == q * (q - static_cast<long long>(out.A.size()));
  }
  return out;
}

CorrelationReport autocorrelation_report(const CorrelationSpec& spec) {
  CorrelationReport rep;
  rep.C = autocorrelation_bruteforce(spec);
  if (spec.not_all_even()) {
    rep.charsum_C = autocorrelation_charsum(spec);
    rep.discrepancy = rep.C - *rep.charsum_C;
  }
  rep.bound = theorem_bound(spec.field.size(), spec.n, spec.r());
  rep.bound_ok = (spec.n > 2 && spec.not_all_even())
                     ? theorem_bound_holds(rep.C, spec.field.size(), spec.n, spec.r())
                     : true;
  if (spec.n == 2) rep.n2 = n2_classify(spec);
  return rep;
}

RatFun berl_sum_ratfun(const std::vector<FqElem>& a, const CorrelationSpec& spec) {
  const Field& fld = spec.field;
  std::vector<std::uint32_t> bits;
  for (const FqElem& e : a) bits.push_back(e.bits);
  const Poly f = poly_from_point(fld, spec.n, bits);
  RatFun p = RatFun::zero(fld);
  for (std::size_t j = 0; j < spec.alphas.size(); ++j) {
    if (spec.eps[j] != 1) continue;
    auto [d, x] = shifted_delta_xi(f, spec.alphas[j]);
    if (d.is_zero())
      throw std::domain_error("berl_sum_ratfun: delta identically zero on this fiber");
    p = p + RatFun(x, d * d);
  }
  if (p.height() > static_cast<int>(spec.r_odd() * (spec.n - 1)))
    throw std::runtime_error("berl_sum_ratfun: height exceeds r(n-1)");
  return p;
}

BadSetReport bad_sets(const Field& field, unsigned n, const std::vector<Poly>& alphas) {
  if (n < 3) throw std::invalid_argument("bad_sets requires n >= 3");
  if (alphas.empty()) throw std::invalid_argument("bad_sets: no shifts");
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j]) throw std::invalid_argument("shifts must be distinct");

  // Normalize so the first shift is zero; C is invariant under translating F.
  std::vector<Poly> al;
  for (const Poly& a : alphas) {
    if (a.degree() >= static_cast<int>(n))
      throw std::invalid_argument("shift degree must be < n");
    al.push_back(a + alphas[0]);
  }

  BadSetReport rep;
  rep.n = n;
  rep.r = static_cast<unsigned>(al.size());
  const unsigned dn = (n - 1) / 2;
  const std::uint32_t q = field.size();

  for_each_point(field, n - 1, [&](const std::vector<std::uint32_t>& a) {
    ++rep.points;
    const Poly f = poly_from_point(field, n, a);
    std::vector<Poly> deltas, xis;
    for (const Poly& alpha : al) {
      auto [d, x] = shifted_delta_xi(f, alpha);
      deltas.push_back(std::move(d));
      xis.push_back(std::move(x));
    }

    const bool deg1_full = deltas[0].degree() == static_cast<int>(dn);
    bool inA = false;
    if (deg1_full) {
      const Poly dd = deltas[0].derivative();
      const Poly xd = xis[0].derivative();
      const Poly Xi = xis[0] * dd * dd + xd * xd;
      inA = Xi.is_zero() || resultant(deltas[0], Xi).is_zero();
    }
    bool inB = false;
    for (std::size_t j = 1; j < deltas.size() && !inB; ++j)
      inB = deg1_full && deltas[j].degree() == static_cast<int>(dn) &&
            resultant(deltas[0], deltas[j]).is_zero();
    bool inC = false;
    for (const Poly& d : deltas)
      if (d.degree() < static_cast<int>(dn)) {
        inC = true;
        break;
      }

    bool inG = false;
    bool p_defined = true;
    for (const Poly& d : deltas)
      if (d.is_zero()) p_defined = false;
    RatFun p = RatFun::zero(field);
    if (p_defined) {
      for (std::size_t j = 0; j < deltas.size(); ++j)
        p = p + RatFun(xis[j], deltas[j] * deltas[j]);
      const auto [deg, c] = is_asp_degenerate(p);
      inG = deg;
      if (deg && c.trace() == 0) ++rep.strict_G;
    }

    if (inA) rep.A.push_back(a);
    if (inB) rep.B.push_back(a);
    if (inC) rep.C.push_back(a);
    if (inG) rep.G.push_back(a);

    if (!inA && !inB && !inC && p_defined) {
      ++rep.fiber_checks;
      const WeilReport wr = weil_check(p);
      const long long s2 = char_sum(p) * char_sum(p);
      const long long rn = static_cast<long long>(rep.r) * n;
      const bool small = s2 < rn * rn * static_cast<long long>(q);
      if (wr.degenerate || !wr.weil_ok || !wr.transfer_ok || !wr.chain_ok || !small)
        rep.fibers_ok = false;
    }
  });

  // Coverage defaulted to true unless a violation was seen above.
  rep.covering_ok = true;
  for (const auto& g : rep.G) {
    auto member = [&](const std::vector<std::vector<std::uint32_t>>& set) {
      return std::find(set.begin(), set.end(), g) != set.end();
    };
    if (!member(rep.A) && !member(rep.B) && !member(rep.C)) rep.covering_ok = false;
  }

  std::uint64_t qn2 = 1;
  for (unsigned i = 0; i + 2 < n; ++i) qn2 *= q;
  const std::uint64_t n2 = static_cast<std::uint64_t>(n) * n;
  rep.bound_C_ok = rep.C.size() < rep.r * qn2;
  rep.bound_B_ok = 4 * rep.B.size() < 3 * (rep.r - 1) * n2 * qn2;
  rep.bound_A_ok = rep.A.size() < 3 * n2 * qn2;
  rep.bound_G_ok = 4 * rep.G.size() < 3 * (rep.r + 3) * n2 * qn2;
  if (n % 2 == 0) {
    std::set<std::uint32_t> tops;
    for (const Poly& alpha : al) tops.insert(alpha.coeff_bits(n - 1));
    rep.expected_C = tops.size() * qn2;
  }
  return rep;
}

TheoremReport verify_theorem(const Field& field, unsigned n, unsigned r,
                             std::uint64_t budget, std::uint64_t seed) {
  if (n <= 2) throw std::invalid_argument("verify_theorem requires n > 2");
  if (r < 1 || r > 4) throw std::invalid_argument("verify_theorem supports r in [1, 4]");
  const std::uint32_t q = field.size();
  std::uint64_t qn = 1;
  for (unsigned i = 0; i < n; ++i) {
    qn *= q;
    if (qn > (1ull << 26)) throw std::invalid_argument("verify_theorem: q^n exceeds the budget cap");
  }

  // One Mobius table for all monic degree-n polynomials; since q = 2^k the
  // index of F + alpha is index(F) XOR index(alpha).
  std::vector<std::int8_t> mu(qn);
  for (std::uint64_t idx = 0; idx < qn; ++idx) {
    std::vector<std::uint32_t> c(n + 1, 0);
    for (unsigned i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((idx >> (i * field.degree())) & (q - 1));
    c[n] = 1;
    mu[idx] = static_cast<std::int8_t>(mobius(Poly(field, std::move(c))));
  }

  // Count the eps patterns over {1,2}^r that are not all 2.
  const unsigned eps_patterns = (1u << r) - 1;

  TheoremReport rep;
  // Enumerate r-subsets of alpha indices.
  std::vector<std::uint64_t> combo(r);
  std::uint64_t combos_total = 1;
  for (unsigned i = 0; i < r; ++i) combos_total = combos_total * (qn - i) / (i + 1);
  rep.specs_total = combos_total * eps_patterns;
  const std::uint64_t work_per_spec = qn;
  std::uint64_t stride = 1;
  if (rep.specs_total * work_per_spec > budget)
    stride = (rep.specs_total * work_per_spec + budget - 1) / budget;
  std::uint64_t combo_index = 0;
  const std::uint64_t offset = stride > 1 ? seed % stride : 0;

  for (unsigned i = 0; i < r; ++i) combo[i] = i;
  while (true) {
    if (stride == 1 || (combo_index % stride) == offset) {
      for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {
        // bit set = eps 2 for that position; skip the all-2 pattern.
        long long C = 0;
        for (std::uint64_t fidx = 0; fidx < qn; ++fidx) {
          long long prod = 1;
          for (unsigned j = 0; j < r && prod != 0; ++j) {
            long long m = mu[fidx ^ combo[j]];
            if (mask >> j & 1u) m = m * m;
            prod *= m;
          }
          C += prod;
        }
        ++rep.specs_checked;
        rep.max_abs_C = std::max(rep.max_abs_C, std::llabs(C));
        if (!theorem_bound_holds(C, q, n, r)) {
          ++rep.failures;
          rep.all_ok = false;
        }
      }
    }
    ++combo_index;
    // next combination
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && combo[i] == qn - r + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (unsigned j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
  return rep;
}

namespace {

mpz_class signed_power(unsigned n) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), n, n);
  if (((n - 1) / 2) % 2 == 1) v = -v;
  return v;
}

}  // namespace

FamilyReport verify_family_identities(const Field& field, unsigned n, unsigned max_bits) {
  if (n < 3 || n > 8) throw std::invalid_argument("family identities cover 3 <= n <= 8");
  unsigned e = 1;
  while (std::pow(static_cast<double>(field.size()), e) < 4.0 * n) ++e;
  const Extension ext(field, e, max_bits);
  const Field& F = ext.ext();
  // Grid density must exceed every per-variable degree (total degree 4n - 6)
  // so agreement on the grid certifies the polynomial identity.
  if (F.size() <= 4 * n - 6)
    throw std::runtime_error("family grid too small to certify the identities");

  FamilyReport rep;
  rep.n = n;
  rep.grid_q = F.size();

  if (n % 2 == 1) {
    // f + t = x^n + a x^2 + t.
    mpz_class lead = signed_power(n) - 1;  // divisible by 4
    mpz_class lead_q;
    mpz_divexact_ui(lead_q.get_mpz_t(), lead.get_mpz_t(), 4);
    const bool lead_bit = mpz_odd_p(lead_q.get_mpz_t());

    for (std::uint32_t ab = 0; ab < F.size(); ++ab) {
      ++rep.points;
      const FqElem a = F.el(ab);
      std::vector<std::uint32_t> fc(n + 1, 0);
      fc[n] = 1;
      fc[2] ^= a.bits;
      const Poly f(F, std::move(fc));
      const Poly dlt = delta_poly_in_t(f);
      const Poly xi_t = xi_poly_in_t(f);

      const Poly dlt_expect = Poly::monomial(F.one(), (n - 1) / 2);
      Poly xi_expect = Poly::monomial(a.pow(n), 1);
      if (lead_bit) xi_expect = xi_expect + Poly::monomial(F.one(), n - 1);
      if (dlt != dlt_expect) rep.delta_ok = false;
      if (xi_t != xi_expect) rep.xi_ok = false;

      const Poly dd = dlt.derivative(), xd = xi_t.derivative();
      const Poly Xi = xi_t * dd * dd + xd * xd;
      // xi' = a^n and Xi(0) = a^(2n).
      if (xd != Poly::constant(a.pow(n)) && !(xd.is_zero() && a.pow(n).is_zero()))
        rep.xi_cases_ok = false;
      if (Xi.eval(F.zero()) != a.pow(2 * n)) rep.xi_cases_ok = false;
      if (!a.is_zero() && resultant(dlt, Xi).is_zero()) rep.res_nonzero_ok = false;
    }
  } else {
    // f + t = x^n + a x^(n-1) + b x + t, n = 2m.
    const unsigned m = n / 2;
    for (std::uint32_t ab = 0; ab < F.size(); ++ab) {
      for (std::uint32_t bb = 0; bb < F.size(); ++bb) {
        ++rep.points;
        const FqElem a = F.el(ab), b = F.el(bb);
        std::vector<std::uint32_t> fc(n + 1, 0);
        fc[n] = 1;
        fc[n - 1] ^= a.bits;
        fc[1] ^= b.bits;
        const Poly f(F, std::move(fc));
        const Poly dlt = delta_poly_in_t(f);
        const Poly xi_t = xi_poly_in_t(f);

        const Poly dlt_expect =
            Poly::monomial(a.pow(m), m - 1) + Poly::constant(b.pow(m));
        Poly xi_expect(F);
        if (m % 4 == 2 || m % 4 == 3) xi_expect = dlt_expect * dlt_expect;
        if (m % 4 == 0 || m % 4 == 2)
          xi_expect = xi_expect + Poly::monomial(a.pow(m + 1) * b.pow(m + 1), m - 2);
        else
          xi_expect = xi_expect + Poly::monomial(a.pow(m - 1) * b.pow(m - 1), m);
        if (dlt != dlt_expect) rep.delta_ok = false;
        if (xi_t != xi_expect) rep.xi_ok = false;

        const Poly dd = dlt.derivative(), xd = xi_t.derivative();
        const Poly Xi = xi_t * dd * dd + xd * xd;
        Poly Xi_expect(F);
        if (m % 2 == 1) {
          Xi_expect = Poly::monomial(a.pow(n - 2) * b.pow(n - 2), n - 2);
        } else {
          Xi_expect = Poly::monomial(a.pow(3 * m + 1) * b.pow(m + 1), 3 * m - 6);
          if (m % 4 == 2)
            Xi_expect = Xi_expect + Poly::monomial(a.pow(n), n - 4) * dlt * dlt;
        }
        if (Xi != Xi_expect) rep.xi_cases_ok = false;
        if (!a.is_zero() && !b.is_zero() && resultant(dlt, Xi).is_zero())
          rep.res_nonzero_ok = false;
      }
    }
  }
  return rep;
}

NonvanishingReport verify_nonvanishing(const Field& field, unsigned n, unsigned max_bits) {
  if (n < 3) throw std::invalid_argument("nonvanishing checks require n >= 3");
  NonvanishingReport rep;
  rep.n = n;
  const unsigned dn = (n - 1) / 2;

  // Witness family over the base field itself.
  for (std::uint32_t ab = 0; ab < field.size(); ++ab) {
    const FqElem a = field.el(ab);
    if (a.is_zero()) continue;
    if (n % 2 == 1) {
      std::vector<std::uint32_t> fc(n + 1, 0);
      fc[n] = 1;
      fc[2] ^= a.bits;
      const Poly f(field, std::move(fc));
      const Poly dlt = delta_poly_in_t(f), xi_t = xi_poly_in_t(f);
      const Poly dd = dlt.derivative(), xd = xi_t.derivative();
      const Poly Xi = xi_t * dd * dd + xd * xd;
      ++rep.family_points;
      if (Xi.is_zero() || resultant(dlt, Xi).is_zero()) rep.family_ok = false;
    } else {
      for (std::uint32_t bb = 1; bb < field.size(); ++bb) {
        const FqElem b = field.el(bb);
        std::vector<std::uint32_t> fc(n + 1, 0);
        fc[n] = 1;
        fc[n - 1] ^= a.bits;
        fc[1] ^= b.bits;
        const Poly f(field, std::move(fc));
        const Poly dlt = delta_poly_in_t(f), xi_t = xi_poly_in_t(f);
        const Poly dd = dlt.derivative(), xd = xi_t.derivative();
        const Poly Xi = xi_t * dd * dd + xd * xd;
        ++rep.family_points;
        if (Xi.is_zero() || resultant(dlt, Xi).is_zero()) rep.family_ok = false;
      }
    }
  }

  // A witness point a with Res(delta_f, delta_{f+alpha}) != 0 for each
  // nonzero alpha, extending the field if the base search is exhausted.
  for_each_point(field, n, [&](const std::vector<std::uint32_t>& ac) {
    bool all_zero = true;
    for (std::uint32_t c : ac) all_zero = all_zero && c == 0;
    if (all_zero) return;
    std::vector<std::uint32_t> av(ac);
    const Poly alpha(field, std::move(av));
    ++rep.alphas_checked;

    bool found = false;
    for (unsigned e = 1; !found && field.degree() * e <= max_bits; ++e) {
      const Extension ext(field, e, max_bits);
      const Field& F = ext.ext();
      const Poly alpha_e = embed_poly(alpha, ext);
      for_each_point(F, n - 1, [&](const std::vector<std::uint32_t>& pt) {
        if (found) return;
        const Poly f = poly_from_point(F, n, pt);
        auto [d1, x1] = shifted_delta_xi(f, Poly(F));
        auto [d2, x2] = shifted_delta_xi(f, alpha_e);
        if (d1.degree() == static_cast<int>(dn) && d2.degree() == static_cast<int>(dn) &&
            !resultant(d1, d2).is_zero())
          found = true;
      });
    }
    if (found)
      ++rep.witnesses_found;
    else
      rep.witness_ok = false;
  });
  return rep;
}

SqIndepReport square_independence_check(const Field& field, unsigned n,
                                        const std::vector<Poly>& alphas, unsigned e,
                                        unsigned max_bits) {
  if (n < 3) throw std::invalid_argument("square independence requires n >= 3");
  if (alphas.empty() || alphas.size() > 6)
    throw std::invalid_argument("square independence supports 1..6 shifts");
  const Extension ext(field, e, max_bits);
  const Field& F = ext.ext();
  std::vector<Poly> al;
  for (const Poly& a : alphas) al.push_back(embed_poly(a, ext));
  const unsigned r = static_cast<unsigned>(al.size());

  SqIndepReport rep;
  rep.n = n;
  rep.r = r;
  rep.e = e;

  for_each_point(F, n - 1, [&](const std::vector<std::uint32_t>& pt) {
    ++rep.points;
    const Poly f = poly_from_point(F, n, pt);
    std::vector<Poly> deltas, xis;
    bool defined = true;
    for (const Poly& alpha : al) {
      auto [d, x] = shifted_delta_xi(f, alpha);
      if (d.is_zero()) defined = false;
      deltas.push_back(std::move(d));
      xis.push_back(std::move(x));
    }
    if (!defined) {
      ++rep.bad;
      ++rep.strict_bad;
      return;
    }
    bool bad = false, strict = false;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      RatFun p = RatFun::zero(F);
      for (unsigned j = 0; j < r; ++j)
        if (mask >> j & 1u) p = p + RatFun(xis[j], deltas[j] * deltas[j]);
      const auto [deg, c] = is_asp_degenerate(p);
      if (deg) bad = true;
      if (deg && c.trace() == 0) strict = true;
    }
    if (bad) ++rep.bad;
    if (strict) ++rep.strict_bad;
  });

  std::uint64_t qe_n2 = 1;
  for (unsigned i = 0; i + 2 < n; ++i) qe_n2 *= F.size();
  rep.bound_ok = 4 * rep.bad <= 3ull * r * (r + 3) * n * n * qe_n2;
  rep.witness_ok = rep.bad < rep.points;
  rep.strict_witness_ok = rep.strict_bad < rep.points;
  return rep;
}

PelletReport verify_pellet(const Field& field, unsigned n) {
  PelletReport rep;
  rep.n = n;
  const int sign = (n % 2 == 0) ? 1 : -1;
  for_each_point(field, n - 1, [&](const std::vector<std::uint32_t>& a) {
    const Poly f = poly_from_point(field, n, a);
    const Poly dlt = delta_poly_in_t(f);
    const Poly xi_t = xi_poly_in_t(f);
    for (std::uint32_t tb = 0; tb < field.size(); ++tb) {
      const FqElem t0 = field.el(tb);
      const Poly F = f.add_constant(t0);
      const int m = mobius(F);
      const FqElem dv = dlt.eval(t0);
      if (dv.is_zero()) {
        ++rep.nonsquarefree_checked;
        if (m != 0) rep.ok = false;  // delta = 0 must mean non-squarefree
        continue;
      }
      ++rep.squarefree_checked;
      if (m == 0) {
        rep.ok = false;  // squarefree by delta but mu says otherwise
        continue;
      }
      const FqElem berl_v = xi_t.eval(t0) / (dv * dv);
      if (m != sign * chi2(berl_v)) rep.ok = false;
    }
  });
  return rep;
}

}  // namespace chowla2
