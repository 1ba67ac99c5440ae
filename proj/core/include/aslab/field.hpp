#pragma once

// Exact arithmetic for F_p, F_{p^n} and the rational function field K(Z)
// over a finite field K.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aslab/error.hpp"

namespace aslab {

enum class FieldKind { prime, extension, rational_function };

// Raw element storage, interpreted by the owning FieldDescriptor.
//
// Finite fields use `index` = c_0 + c_1 p + ... + c_{n-1} p^{n-1}, where
// c_0 + c_1 t + ... is the residue class modulo the field's modulus.
// Rational functions use `num`/`den`: base-field indices, low degree first,
// with den monic and gcd(num, den) = 1. Zero is num = {} and den = {1}.
// Every Value produced by a FieldDescriptor is canonical, so equality is
// structural.
struct Value {
  std::uint32_t index = 0;
  std::vector<std::uint32_t> num;
  std::vector<std::uint32_t> den;

  friend bool operator==(const Value&, const Value&) = default;
  friend auto operator<=>(const Value&, const Value&) = default;
};

class FieldDescriptor;
using Field = std::shared_ptr<const FieldDescriptor>;

// Largest supported finite field.
inline constexpr std::uint32_t kMaxFiniteFieldSize = 729;

class FieldDescriptor {
 public:
  struct Tables;

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  // [F : F_p] for finite fields; [K : F_p] for K(Z).
  std::uint32_t degree() const noexcept { return n_; }
  bool is_finite() const noexcept { return kind_ != FieldKind::rational_function; }
  // Number of elements; throws PreconditionError for K(Z).
  std::uint32_t size() const;
  // Monic irreducible modulus over F_p, low degree first (extension kind only).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  // Coefficient field K (rational-function kind only).
  const Field& base() const noexcept { return base_; }
  // The finite field holding the constants: itself, or K for K(Z).
  const FieldDescriptor& constant_field() const noexcept;
  // Canonical field-spec string, e.g. "GF(4)" or "GF(3)(Z)".
  const std::string& spec() const noexcept { return spec_; }

  Value zero() const;
  Value one() const;
  Value from_int(std::int64_t k) const;
  // Finite fields: the element with the given index.
  Value element(std::uint32_t index) const;
  // The field generator: t for extensions, Z for K(Z).
  Value generator() const;
  // Embeds a constant of constant_field() (an index) into this field.
  Value constant(std::uint32_t k) const;
  // The constant-field index of `x` when x is a constant, nullopt otherwise.
  std::optional<std::uint32_t> constant_index(const Value& x) const;

  bool is_zero(const Value& x) const noexcept;
  bool is_one(const Value& x) const noexcept;
  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;
  // Throws PreconditionError on zero.
  Value inv(const Value& a) const;
  Value div(const Value& a, const Value& b) const;
  Value pow(const Value& a, std::uint64_t k) const;
  // x^p. Finite fields only.
  Value frobenius(const Value& x) const;
  // The unique y with y^p = x. Finite fields only.
  Value pth_root(const Value& x) const;
  // Checks the representation invariants listed on Value.
  bool is_canonical(const Value& x) const;

  std::string format(const Value& x) const;
  Value parse(std::string_view text) const;

  // Index arithmetic on finite fields (no checks).
  std::uint32_t fadd(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t fsub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t fneg(std::uint32_t a) const noexcept;
  std::uint32_t fmul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t finv(std::uint32_t a) const noexcept;
  std::uint32_t fpow(std::uint32_t a, std::uint64_t k) const noexcept;
  // Coefficient vector of a finite-field index over F_p, length degree().
  std::vector<std::uint32_t> digits(std::uint32_t index) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& digits) const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);

  FieldDescriptor(FieldKind kind, std::uint32_t p, std::uint32_t n,
                  std::vector<std::uint32_t> modulus, Field base);
  ~FieldDescriptor();
  FieldDescriptor(const FieldDescriptor&) = delete;
  FieldDescriptor& operator=(const FieldDescriptor&) = delete;

 private:
  FieldKind kind_;
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Field base_;
  std::string spec_;
  std::unique_ptr<Tables> tables_;
};

bool same_field(const Field& a, const Field& b) noexcept;
// Throws PreconditionError naming `where` if the fields differ.
void require_same_field(const Field& a, const Field& b, std::string_view where);

bool is_prime(std::uint64_t n) noexcept;
// Exhaustive irreducibility test for a polynomial over F_p (low degree first).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p);
// Lexicographically smallest monic irreducible of degree n over F_p, with
// coefficient vectors compared low degree first.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t n);

Field prime_field(std::uint32_t p);
Field extension_field(std::uint32_t p, std::uint32_t n);
Field extension_field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);
Field rational_function_field(const Field& base);
// Accepts "GF(p)", "GF(q)", "GF(p^n)", "GF(p^n; mod=<poly in t>)" and any of
// these followed by "(Z)".
Field make_field(std::string_view spec);

// An element bundled with its field. Convenience layer over Value.
class FieldElement {
 public:
  FieldElement(Field field, Value value);

  const Field& field() const noexcept { return field_; }
  const Value& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return field_->is_zero(value_); }
  std::string to_string() const { return field_->format(value_); }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t k) const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  Value value_;
};

FieldElement parse_element(const Field& field, std::string_view text);

// x^p; rejects K(Z), where Frobenius is not surjective.
FieldElement frobenius(const FieldElement& x);
// All elements of a finite field, ordered by index (so GF(4) gives 0, 1, t, t+1).
std::vector<FieldElement> enumerate_elements(const Field& field);

// Index map GF(p^m) -> GF(p^k) for m | k, sending t to the first root (by
// index) of the smaller modulus. Cached per field pair; thread-safe.
std::vector<std::uint32_t> subfield_embedding(const Field& small, const Field& large);
// Whether F contains a copy of GF(p^n), F finite or K(Z) with K finite.
bool contains_subfield(const FieldDescriptor& field, std::uint32_t n) noexcept;
// The copy of GF(p^n) inside F as values of F, ordered by constant index.
std::vector<Value> subfield_elements(const FieldDescriptor& field, std::uint32_t n);

}  // namespace aslab
