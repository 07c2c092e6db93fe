#include "chowla2/gf2k.hpp"

#include <cstdio>

namespace chowla2 {

namespace {

int f2_degree(std::uint32_t p) {
  int d = -1;
  for (int i = 0; i < 32; ++i)
    if (p >> i & 1u) d = i;
  return d;
}

std::uint32_t f2_mod(std::uint32_t a, std::uint32_t b) {
  const int db = f2_degree(b);
  for (int da = f2_degree(a); da >= db; da = f2_degree(a)) a ^= b << (da - db);
  return a;
}

}  // namespace

bool Field::is_irreducible_f2(std::uint32_t poly, unsigned k) {
  if (f2_degree(poly) != static_cast<int>(k)) return false;
  if (k == 1) return true;
  for (unsigned dd = 1; dd <= k / 2; ++dd)
    for (std::uint32_t d = 1u << dd; d < (2u << dd); ++d)
      if (f2_mod(poly, d) == 0) return false;
  return true;
}

std::uint32_t Field::default_modulus(unsigned k) {
  for (std::uint32_t c = 1u << k; c < (2u << k); ++c)
    if (is_irreducible_f2(c, k)) return c;
  throw std::runtime_error("no irreducible modulus found");  // unreachable
}

Field::Field(unsigned k) : Field(k, default_modulus(k)) {}

Field::Field(unsigned k, std::uint32_t modulus) {
  if (k < 1 || k > kMaxFieldBits) throw std::invalid_argument("field degree must be in [1, 16]");
  if (!is_irreducible_f2(modulus, k))
    throw std::invalid_argument("field modulus is not an irreducible degree-k polynomial");
  impl_ = std::make_shared<const Impl>(Impl{k, modulus, 1u << k});
}

FqElem Field::el(std::uint32_t bits) const { return FqElem(*this, bits); }

FqElem Field::gen() const { return el(degree() >= 2 ? 2u : (modulus() & 1u)); }

std::uint32_t Field::mul_bits(std::uint32_t a, std::uint32_t b) const {
  const unsigned k = impl_->k;
  const std::uint32_t mod = impl_->mod;
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> k & 1u) a ^= mod;
  }
  return r;
}

std::uint32_t Field::pow_bits(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1u) r = mul_bits(r, a);
    a = mul_bits(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::inv_bits(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero field element");
  return pow_bits(a, impl_->q - 2);
}

std::uint32_t Field::sqrt_bits(std::uint32_t a) const {
  for (unsigned i = 0; i + 1 < impl_->k; ++i) a = mul_bits(a, a);
  return a;
}

int Field::trace_bits(std::uint32_t a) const {
  std::uint32_t t = a, s = a;
  for (unsigned i = 1; i < impl_->k; ++i) {
    s = mul_bits(s, s);
    t ^= s;
  }
  if (t > 1) throw std::runtime_error("trace did not land in F_2");
  return static_cast<int>(t);
}

std::string Field::to_string() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "k=%u,mod=0x%x", degree(), modulus());
  return buf;
}

static void check_same_field(const FqElem& a, const FqElem& b) {
  if (a.field != b.field) throw std::invalid_argument("field mismatch");
}

FqElem FqElem::operator+(const FqElem& o) const {
  check_same_field(*this, o);
  return FqElem(field, bits ^ o.bits);
}

FqElem FqElem::operator*(const FqElem& o) const {
  check_same_field(*this, o);
  return FqElem(field, field.mul_bits(bits, o.bits));
}

FqElem FqElem::operator/(const FqElem& o) const {
  check_same_field(*this, o);
  return FqElem(field, field.mul_bits(bits, field.inv_bits(o.bits)));
}

bool FqElem::operator==(const FqElem& o) const {
  check_same_field(*this, o);
  return bits == o.bits;
}

FqElem FqElem::inv() const { return FqElem(field, field.inv_bits(bits)); }
FqElem FqElem::pow(std::uint64_t e) const { return FqElem(field, field.pow_bits(bits, e)); }
FqElem FqElem::sqrt() const { return FqElem(field, field.sqrt_bits(bits)); }

std::string FqElem::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", bits);
  return buf;
}

std::vector<FqElem> enumerate_field(const Field& f) {
  std::vector<FqElem> out;
  out.reserve(f.size());
  for (std::uint32_t b = 0; b < f.size(); ++b) out.push_back(f.el(b));
  return out;
}

Field parse_field(const std::string& spec) {
  unsigned k = 0;
  unsigned long mod = 0;
  if (std::sscanf(spec.c_str(), "k=%u,mod=0x%lx", &k, &mod) == 2)
    return Field(k, static_cast<std::uint32_t>(mod));
  if (std::sscanf(spec.c_str(), "k=%u", &k) == 1) return Field(k);
  throw std::invalid_argument("bad field spec '" + spec + "', expected k=<int>[,mod=0x<hex>]");
}

FqElem parse_elem(const Field& f, const std::string& lit) {
  unsigned long bits = 0;
  if (std::sscanf(lit.c_str(), "0x%lx", &bits) == 1 ||
      std::sscanf(lit.c_str(), "%lu", &bits) == 1) {
    if (bits >= f.size()) throw std::invalid_argument("element literal out of range: " + lit);
    return f.el(static_cast<std::uint32_t>(bits));
  }
  throw std::invalid_argument("bad element literal '" + lit + "'");
}

Extension::Extension(const Field& base, unsigned e, unsigned max_bits)
    : base_(base), ext_(base), e_(e) {
  if (e < 1) throw std::invalid_argument("extension degree must be positive");
  const unsigned kk = base.degree() * e;
  if (kk > max_bits) throw std::invalid_argument("extension exceeds the field size cap");
  if (e > 1) ext_ = Field(kk);

  // Least root of the base modulus in the extension, by exhaustive search.
  const std::uint32_t m = base.modulus();
  bool found = false;
  for (std::uint32_t c = 0; c < ext_.size() && !found; ++c) {
    std::uint32_t v = 0;
    for (int i = f2_degree(m); i >= 0; --i) v = ext_.mul_bits(v, c) ^ ((m >> i) & 1u);
    if (v == 0) {
      gen_image_ = c;
      found = true;
    }
  }
  if (!found) throw std::runtime_error("no root of the base modulus in the extension");

  gen_pows_.resize(base.degree());
  std::uint32_t p = 1;
  for (unsigned i = 0; i < base.degree(); ++i) {
    gen_pows_[i] = p;
    p = ext_.mul_bits(p, gen_image_);
  }
  section_.assign(ext_.size(), -1);
  for (std::uint32_t b = 0; b < base.size(); ++b) {
    std::uint32_t img = 0;
    for (unsigned i = 0; i < base.degree(); ++i)
      if (b >> i & 1u) img ^= gen_pows_[i];
    section_[img] = static_cast<std::int32_t>(b);
  }
}

FqElem Extension::embed(const FqElem& a) const {
  if (a.field != base_) throw std::invalid_argument("embed: element not in the base field");
  std::uint32_t img = 0;
  for (unsigned i = 0; i < base_.degree(); ++i)
    if (a.bits >> i & 1u) img ^= gen_pows_[i];
  return ext_.el(img);
}

std::optional<FqElem> Extension::section(const FqElem& a) const {
  if (a.field != ext_) throw std::invalid_argument("section: element not in the extension");
  const std::int32_t b = section_[a.bits];
  if (b < 0) return std::nullopt;
  return base_.el(static_cast<std::uint32_t>(b));
}

}  // namespace chowla2
