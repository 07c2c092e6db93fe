#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Arithmetic in binary fields F_{2^k}, 1 <= k <= 16, in the polynomial basis
// of an explicit irreducible modulus.  Elements are immutable values.

namespace chowla2 {

struct FqElem;

inline constexpr unsigned kMaxFieldBits = 16;

class Field {
 public:
  /// Field with the lexicographically least irreducible modulus of degree k.
  explicit Field(unsigned k);
  /// Field with an explicit modulus (bit i = coefficient of y^i, bit k set).
  /// The modulus is checked for irreducibility by trial division.
  Field(unsigned k, std::uint32_t modulus);

  unsigned degree() const { return impl_->k; }
  std::uint32_t modulus() const { return impl_->mod; }
  std::uint32_t size() const { return impl_->q; }

  FqElem el(std::uint32_t bits) const;
  FqElem zero() const;
  FqElem one() const;
  FqElem gen() const;  // the class of y

  bool operator==(const Field& o) const {
    return impl_->k == o.impl_->k && impl_->mod == o.impl_->mod;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // Raw bit-level arithmetic; operands must be reduced (< 2^k).
  std::uint32_t add_bits(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_bits(std::uint32_t a) const;
  std::uint32_t pow_bits(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t sqrt_bits(std::uint32_t a) const;
  int trace_bits(std::uint32_t a) const;

  std::string to_string() const;  // "k=<int>,mod=0x<hex>"

  static std::uint32_t default_modulus(unsigned k);
  static bool is_irreducible_f2(std::uint32_t poly, unsigned k);

 private:
  struct Impl {
    unsigned k;
    std::uint32_t mod;
    std::uint32_t q;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Element of F_{2^k}; bit i of `bits` is the coordinate of y^i in the
/// polynomial basis of the field modulus.
struct FqElem {
  FqElem(const Field& f, std::uint32_t b) : field(f), bits(b) {
    if (bits >= field.size()) throw std::invalid_argument("element out of range");
  }

  Field field;
  std::uint32_t bits = 0;

  bool is_zero() const { return bits == 0; }
  bool is_one() const { return bits == 1; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const { return *this + o; }
  FqElem operator-() const { return *this; }
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

  FqElem inv() const;
  FqElem pow(std::uint64_t e) const;
  FqElem sqrt() const;
  FqElem exact_div(const FqElem& o) const { return *this / o; }
  /// Absolute trace to F_2, returned as 0 or 1.
  int trace() const { return field.trace_bits(bits); }

  std::string to_string() const;  // "0x<hex>"
};

inline FqElem Field::zero() const { return el(0); }
inline FqElem Field::one() const { return el(1); }

/// chi2(a) = +1 iff a = y^2 + y for some y, else -1.  Computed as
/// (-1)^trace(a); the image of y -> y^2 + y is exactly the trace kernel.
inline int chi2(const FqElem& a) { return a.trace() == 0 ? 1 : -1; }

/// All 2^k elements in lexicographic (bitvector) order.
std::vector<FqElem> enumerate_field(const Field& f);

Field parse_field(const std::string& spec);                 // "k=3[,mod=0xb]"
FqElem parse_elem(const Field& f, const std::string& lit);  // "0x<hex>"

/// Embedding of F_{2^k} into F_{2^{k e}}, realized by the least root of the
/// base modulus in the extension field.
class Extension {
 public:
  Extension(const Field& base, unsigned e, unsigned max_bits = kMaxFieldBits);

  const Field& base() const { return base_; }
  const Field& ext() const { return ext_; }
  unsigned degree_over_base() const { return e_; }
  FqElem generator_image() const { return ext_.el(gen_image_); }

  FqElem embed(const FqElem& a) const;
  /// Preimage under the embedding, if the element lies in the base image.
  std::optional<FqElem> section(const FqElem& a) const;

 private:
  Field base_, ext_;
  unsigned e_;
  std::uint32_t gen_image_ = 0;
  std::vector<std::uint32_t> gen_pows_;
  std::vector<std::int32_t> section_;
};

}  // namespace chowla2
