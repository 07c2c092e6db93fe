#include "chowla2/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <stdexcept>

namespace chowla2 {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(const Field& f, std::vector<std::uint32_t> coeff_bits)
    : field_(f), c_(std::move(coeff_bits)) {
  for (std::uint32_t b : c_)
    if (b >= f.size()) throw std::invalid_argument("coefficient out of range");
  trim();
}

Poly Poly::constant(const FqElem& c) { return Poly(c.field, {c.bits}); }

Poly Poly::monomial(const FqElem& c, unsigned e) {
  std::vector<std::uint32_t> v(e + 1, 0);
  v[e] = c.bits;
  return Poly(c.field, std::move(v));
}

FqElem Poly::lc() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return field_.el(c_.back());
}

static void check_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(*this, o);
  std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] ^= o.c_[i];
  return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  check_same_field(*this, o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<std::uint32_t> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j]) v[i + j] ^= field_.mul_bits(c_[i], o.c_[j]);
  }
  return Poly(field_, std::move(v));
}

Poly Poly::operator*(const FqElem& s) const {
  if (s.field != field_) throw std::invalid_argument("field mismatch");
  std::vector<std::uint32_t> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul_bits(c_[i], s.bits);
  return Poly(field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  check_same_field(*this, g);
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (degree() < g.degree()) return {Poly(field_), *this};
  const std::uint32_t glc_inv = field_.inv_bits(g.c_.back());
  std::vector<std::uint32_t> rem = c_;
  std::vector<std::uint32_t> quo(degree() - g.degree() + 1, 0);
  for (int d = degree(); d >= g.degree(); --d) {
    const std::uint32_t r = rem[d];
    if (r == 0) continue;
    const std::uint32_t qd = field_.mul_bits(r, glc_inv);
    quo[d - g.degree()] = qd;
    for (size_t j = 0; j < g.c_.size(); ++j)
      rem[d - g.degree() + j] ^= field_.mul_bits(qd, g.c_[j]);
  }
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

Poly Poly::exact_div(const Poly& g) const {
  auto [q, r] = divmod(g);
  if (!r.is_zero()) throw std::runtime_error("exact_div: division is not exact");
  return q;
}

bool Poly::operator==(const Poly& o) const {
  check_same_field(*this, o);
  return c_ == o.c_;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

FqElem Poly::eval(const FqElem& t) const {
  std::uint32_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = field_.mul_bits(acc, t.bits) ^ c_[i];
  return field_.el(acc);
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<std::uint32_t> v(c_.size() - 1, 0);
  for (size_t i = 1; i < c_.size(); ++i)
    if (i & 1u) v[i - 1] = c_[i];
  return Poly(field_, std::move(v));
}

Poly Poly::compose(const Poly& g) const {
  check_same_field(*this, g);
  Poly acc(field_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(field_, {c_[i]});
  return acc;
}

Poly Poly::add_constant(const FqElem& c) const {
  if (c.field != field_) throw std::invalid_argument("field mismatch");
  std::vector<std::uint32_t> v = c_;
  if (v.empty()) v.push_back(0);
  v[0] ^= c.bits;
  return Poly(field_, std::move(v));
}

Poly Poly::shift_var(const FqElem& c) const { return compose(Poly(field_, {c.bits, 1})); }

std::string Poly::to_literal() const {
  if (c_.empty()) return "0x0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += field_.el(c_[i]).to_string();
  }
  return s;
}

std::string Poly::pretty(char var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += c_[i] == 1 ? "1" : field_.el(c_[i]).to_string();
      continue;
    }
    if (c_[i] != 1) {
      s += field_.el(c_[i]).to_string();
      s += '*';
    }
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

namespace {

std::uint32_t parse_coeff_token(const Field& f, const std::string& tok) {
  unsigned long v = 0;
  bool ok = false;
  if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X') &&
      std::all_of(tok.begin() + 2, tok.end(),
                  [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); })) {
    v = std::stoul(tok.substr(2), nullptr, 16);
    ok = true;
  } else if (!tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
    v = std::stoul(tok);
    ok = true;
  }
  if (!ok || v >= f.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
  return static_cast<std::uint32_t>(v);
}

Poly parse_pretty(const Field& f, const std::string& in) {
  std::vector<std::uint32_t> coeffs;
  auto add_term = [&](std::uint32_t c, unsigned e) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    coeffs[e] ^= c;
  };
  size_t pos = 0;
  while (pos < in.size()) {
    size_t end = in.find_first_of("+-", pos);
    if (end == std::string::npos) end = in.size();
    std::string term = in.substr(pos, end - pos);
    pos = end + 1;
    if (term.empty()) continue;

    std::uint32_t c = 1;
    unsigned e = 0;
    size_t i = 0;
    // optional coefficient literal
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      size_t j = 1;
      if (term.size() > 1 && (term[1] == 'x' || term[1] == 'X') && term[0] == '0') {
        j = 2;
        while (j < term.size() && std::isxdigit(static_cast<unsigned char>(term[j]))) ++j;
      } else {
        while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
      }
      c = parse_coeff_token(f, term.substr(0, j));
      i = j;
      if (i < term.size() && term[i] == '*') ++i;
    }
    // optional variable with exponent
    if (i < term.size()) {
      if (!std::isalpha(static_cast<unsigned char>(term[i])))
        throw std::invalid_argument("bad polynomial term '" + term + "'");
      ++i;
      e = 1;
      if (i < term.size() && term[i] == '^') {
        const std::string exp = term.substr(i + 1);
        if (exp.empty() || exp.size() > 6 || !std::all_of(exp.begin(), exp.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c));
            }))
          throw std::invalid_argument("bad exponent in term '" + term + "'");
        e = static_cast<unsigned>(std::stoul(exp));
        i = term.size();
      }
      if (i != term.size()) throw std::invalid_argument("bad polynomial term '" + term + "'");
    }
    add_term(c, e);
  }
  return Poly(f, std::move(coeffs));
}

}  // namespace

Poly Poly::parse(const Field& f, const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty polynomial literal");
  if (t.find(',') != std::string::npos) {
    std::vector<std::uint32_t> coeffs;
    size_t pos = 0;
    while (pos <= t.size()) {
      size_t end = t.find(',', pos);
      if (end == std::string::npos) end = t.size();
      coeffs.push_back(parse_coeff_token(f, t.substr(pos, end - pos)));
      pos = end + 1;
      if (end == t.size()) break;
    }
    return Poly(f, std::move(coeffs));
  }
  // A plain constant token parses in either format; anything else is the
  // pretty form.
  try {
    return Poly(f, {parse_coeff_token(f, t)});
  } catch (const std::invalid_argument&) {
    return parse_pretty(f, t);
  }
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

FqElem resultant(const Poly& f, const Poly& g) {
  check_same_field(f, g);
  const Field& fld = f.field();
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return fld.zero();
  Poly a = f, b = g;
  FqElem acc = fld.one();
  while (true) {
    if (a.degree() == 0) return acc * fld.el(a.coeff_bits(0)).pow(b.degree());
    if (b.degree() == 0) return acc * fld.el(b.coeff_bits(0)).pow(a.degree());
    Poly r = a % b;
    if (r.is_zero()) return fld.zero();
    acc = acc * b.lc().pow(a.degree() - r.degree());
    a = b;
    b = r;
  }
}

bool is_squarefree(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("squarefree test requires degree >= 1");
  Poly d = f.derivative();
  if (d.is_zero()) return false;  // perfect square in characteristic 2
  return gcd(f, d).degree() == 0;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly r = Poly(base.field(), {1}) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1u) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

Poly poly_sqrt(const Poly& f) {
  if (!f.derivative().is_zero()) throw std::invalid_argument("poly_sqrt: not a perfect square");
  std::vector<std::uint32_t> v(f.degree() / 2 + 1, 0);
  for (int i = 0; i <= f.degree(); i += 2) v[i / 2] = f.field().sqrt_bits(f.coeff_bits(i));
  return Poly(f.field(), std::move(v));
}

int mobius(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("mobius of the zero polynomial");
  if (f.is_constant()) return 1;
  Poly g = f.monic();
  if (!is_squarefree(g)) return 0;
  const Field& fld = g.field();
  const int n = g.degree();

  // Columns of the Frobenius matrix on F_q[x]/(g): x^(i q) mod g.
  Poly xq = poly_powmod(Poly::x(fld), fld.size(), g);
  std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(n, 0));
  Poly cur(fld, {1});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[j][i] = cur.coeff_bits(j);
    if (i + 1 < n) cur = (cur * xq) % g;
  }
  for (int i = 0; i < n; ++i) a[i][i] ^= 1u;  // Frobenius - identity

  // Rank by Gaussian elimination; r = dim ker = number of irreducible factors.
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row)
      if (a[row][col]) {
        piv = row;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const std::uint32_t inv = fld.inv_bits(a[rank][col]);
    for (int j = col; j < n; ++j) a[rank][j] = fld.mul_bits(a[rank][j], inv);
    for (int row = 0; row < n; ++row) {
      if (row == rank || a[row][col] == 0) continue;
      const std::uint32_t m = a[row][col];
      for (int j = col; j < n; ++j) a[row][j] ^= fld.mul_bits(m, a[rank][j]);
    }
    ++rank;
  }
  const int r = n - rank;
  return (r & 1) ? -1 : 1;
}

Poly Factorization::product() const {
  Poly p = Poly::constant(unit);
  for (const auto& [q, m] : factors)
    for (int i = 0; i < m; ++i) p = p * q;
  return p;
}

namespace {

// (squarefree monic part, exact multiplicity), pairwise coprime parts.
void squarefree_decomposition(const Poly& f, int mult,
                              std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() < 1) return;
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_decomposition(poly_sqrt(f), 2 * mult, out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = f.exact_div(c);
  int j = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w.exact_div(y);
    if (z.degree() > 0) out.emplace_back(z, mult * j);
    w = y;
    c = c.exact_div(y);
    ++j;
  }
  if (c.degree() > 0) squarefree_decomposition(poly_sqrt(c), 2 * mult, out);
}

// (product of irreducibles of equal degree d, d) for squarefree monic g.
std::vector<std::pair<Poly, int>> distinct_degree_split(const Poly& g0) {
  std::vector<std::pair<Poly, int>> out;
  Poly g = g0;
  const Field& fld = g.field();
  Poly h = Poly::x(fld) % g;
  int d = 0;
  while (g.degree() > 0) {
    ++d;
    if (2 * d > g.degree()) {
      out.emplace_back(g, g.degree());
      break;
    }
    h = poly_powmod(h, fld.size(), g);
    Poly gd = gcd(h + Poly::x(fld), g);
    if (gd.degree() > 0) {
      out.emplace_back(gd, d);
      g = g.exact_div(gd);
      h = h % g;
    }
  }
  return out;
}

// Equal-degree splitting with the characteristic-2 trace map randomizer.
void equal_degree_split(const Poly& prod, int d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (prod.degree() == d) {
    out.push_back(prod);
    return;
  }
  const Field& fld = prod.field();
  const unsigned m = fld.degree() * static_cast<unsigned>(d);
  while (true) {
    std::vector<std::uint32_t> cv(prod.degree());
    for (auto& c : cv) c = static_cast<std::uint32_t>(rng() % fld.size());
    Poly u(fld, std::move(cv));
    if (u.is_zero()) continue;
    Poly t = u, s = u;
    for (unsigned i = 1; i < m; ++i) {
      s = (s * s) % prod;
      t = t + s;
    }
    Poly g = gcd(t, prod);
    if (g.degree() > 0 && g.degree() < prod.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(prod.exact_div(g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
  Factorization out{f.lc(), {}};
  if (f.is_constant()) return out;
  Poly g = f.monic();
  std::mt19937_64 rng(seed);

  std::vector<std::pair<Poly, int>> sqf;
  squarefree_decomposition(g, 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [prod, d] : distinct_degree_split(part)) {
      std::vector<Poly> irr;
      equal_degree_split(prod, d, rng, irr);
      for (const Poly& p : irr) out.factors.emplace_back(p, mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i)
      if (a.first.coeff_bits(i) != b.first.coeff_bits(i))
        return a.first.coeff_bits(i) < b.first.coeff_bits(i);
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (!is_squarefree(f)) return false;
  auto dd = distinct_degree_split(f.monic());
  return dd.size() == 1 && dd[0].second == f.degree();
}

unsigned splitting_degree(const Poly& f, std::uint64_t seed) {
  unsigned l = 1;
  for (const auto& [p, m] : factor(f, seed).factors)
    l = std::lcm(l, static_cast<unsigned>(p.degree()));
  return l;
}

std::vector<FqElem> roots_in_extension(const Poly& f, const Extension& ext) {
  if (f.field() != ext.base()) throw std::invalid_argument("field mismatch");
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const unsigned d = splitting_degree(f);
  if (ext.degree_over_base() % d != 0)
    throw std::invalid_argument("extension too small to split the polynomial");
  Poly g = embed_poly(f, ext);
  std::vector<FqElem> roots;
  for (std::uint32_t b = 0; b < ext.ext().size(); ++b) {
    FqElem t = ext.ext().el(b);
    while (g.degree() > 0 && g.eval(t).is_zero()) {
      roots.push_back(t);
      g = g.exact_div(Poly(ext.ext(), {t.bits, 1}));  // divide by (x + t)
    }
  }
  if (static_cast<int>(roots.size()) != f.degree())
    throw std::runtime_error("roots_in_extension: did not split completely");
  return roots;
}

Poly embed_poly(const Poly& f, const Extension& ext) {
  std::vector<std::uint32_t> v(f.degree() + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) v[i] = ext.embed(f.coeff(i)).bits;
  return Poly(ext.ext(), std::move(v));
}

}  // namespace chowla2
