#pragma once

// Exact scalar fields: prime fields F_p, small extensions GF(p^k) given by an
// explicit monic irreducible modulus, and the rationals.
//
// Two layers live here. FiniteField / RationalField are lightweight field
// contexts with a `value_type`; all algebra templates are written against the
// ExactField concept and run on raw values. FieldElement is the owning,
// self-describing value used at API boundaries (parsing, printing, mixed-field
// checks).

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ecalg {

enum class FieldKind { prime, extension, rational };

enum class FieldErrc {
  malformed,
  not_prime,
  reducible,
  unsupported,
  division_by_zero,
  mixed_fields,
  not_enumerable,
};

class FieldError : public std::runtime_error {
 public:
  FieldError(FieldErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  FieldErrc code() const noexcept { return code_; }

 private:
  FieldErrc code_;
};

/// Description of an exact field. Construct through parse_field_spec or the
/// named factories; both validate primality and irreducibility.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint32_t characteristic = 0;  // 0 for Q
  std::uint32_t degree = 1;
  std::vector<std::uint32_t> modulus;  // low to high, monic; extension only

  static FieldSpec prime(std::uint32_t p);
  static FieldSpec extension(std::uint32_t p, std::vector<std::uint32_t> modulus);
  static FieldSpec rational();

  bool enumerable() const noexcept { return kind != FieldKind::rational; }
  /// Number of elements; 0 for Q.
  std::uint64_t order() const noexcept;
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Grammar: `Q` | `F<p>` | `F<p^k>:<monic polynomial in x over F_p>`.
FieldSpec parse_field_spec(std::string_view text);

bool is_prime(std::uint64_t n) noexcept;

/// Monic polynomial over F_p (coefficients low to high) has no monic factor of
/// degree 1..deg/2. Exhaustive trial division.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Element of a finite field, encoded by its index in enumeration order.
/// Prime fields: the residue. Extensions: sum of c_i p^i over the polynomial
/// coefficients (c_0 least significant), so GF(4) lists 0, 1, x, x+1.
struct Fq {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

namespace detail {
struct FiniteFieldData;
}

class FiniteField {
 public:
  using value_type = Fq;

  /// Largest order for which add/mul tables are built. Extension fields must
  /// fit in it; larger prime fields fall back to modular arithmetic.
  static constexpr std::uint32_t kTableLimit = 256;

  explicit FiniteField(const FieldSpec& spec);

  const FieldSpec& spec() const noexcept;
  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Fq zero() const noexcept { return {0}; }
  Fq one() const noexcept { return {1}; }
  bool is_zero(Fq a) const noexcept { return a.code == 0; }

  Fq add(Fq a, Fq b) const noexcept {
    if (add_) return {add_[a.code * q_ + b.code]};
    std::uint64_t s = std::uint64_t{a.code} + b.code;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Fq neg(Fq a) const noexcept {
    if (neg_) return {neg_[a.code]};
    return {a.code == 0 ? 0 : p_ - a.code};
  }
  Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const noexcept {
    if (mul_) return {mul_[a.code * q_ + b.code]};
    return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  }
  /// Throws FieldError(division_by_zero) on zero.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::int64_t n) const;

  /// Image of an integer under Z -> K.
  Fq from_int(std::int64_t n) const noexcept;
  /// The element with the given enumeration index (< order()).
  Fq element(std::uint32_t index) const;
  std::vector<Fq> elements() const;

  std::string format(Fq a) const;
  Fq parse(std::string_view text) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.data_ == b.data_ || a.spec() == b.spec();
  }

 private:
  std::shared_ptr<const detail::FiniteFieldData> data_;
  // Cached views into data_ for the arithmetic fast path.
  std::uint32_t p_ = 0;
  std::uint32_t q_ = 0;
  const std::uint16_t* add_ = nullptr;
  const std::uint16_t* mul_ = nullptr;
  const std::uint16_t* neg_ = nullptr;
};

/// The rationals, as reduced fractions of arbitrary-precision integers.
class RationalField {
 public:
  using value_type = mpq_class;

  const FieldSpec& spec() const noexcept;

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }
  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class neg(const mpq_class& a) const { return -a; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }
  mpq_class pow(const mpq_class& a, std::int64_t n) const;
  mpq_class from_int(std::int64_t n) const { return mpq_class(static_cast<long>(n)); }

  std::string format(const mpq_class& a) const { return a.get_str(); }
  mpq_class parse(std::string_view text) const;

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

template <class K>
concept ExactField = requires(const K& k, const typename K::value_type& a, std::int64_t n,
                              std::string_view s) {
  { k.spec() } -> std::convertible_to<const FieldSpec&>;
  { k.zero() } -> std::same_as<typename K::value_type>;
  { k.one() } -> std::same_as<typename K::value_type>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.add(a, a) } -> std::same_as<typename K::value_type>;
  { k.sub(a, a) } -> std::same_as<typename K::value_type>;
  { k.neg(a) } -> std::same_as<typename K::value_type>;
  { k.mul(a, a) } -> std::same_as<typename K::value_type>;
  { k.inv(a) } -> std::same_as<typename K::value_type>;
  { k.div(a, a) } -> std::same_as<typename K::value_type>;
  { k.pow(a, n) } -> std::same_as<typename K::value_type>;
  { k.from_int(n) } -> std::same_as<typename K::value_type>;
  { k.format(a) } -> std::same_as<std::string>;
  { k.parse(s) } -> std::same_as<typename K::value_type>;
  { k == k } -> std::convertible_to<bool>;
};

template <class K>
concept EnumerableField = ExactField<K> && requires(const K& k) {
  { k.elements() } -> std::same_as<std::vector<typename K::value_type>>;
  { k.order() } -> std::convertible_to<std::uint64_t>;
};

template <ExactField K>
using Value = typename K::value_type;

/// A field value bound to its field, for writing polynomial identities with
/// ordinary operators. Non-owning: the field must outlive the Scalar.
template <ExactField K>
class Scalar {
 public:
  Scalar(const K& field, Value<K> v) : field_(&field), v_(std::move(v)) {}

  const Value<K>& value() const noexcept { return v_; }
  const K& field() const noexcept { return *field_; }
  bool is_zero() const { return field_->is_zero(v_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return {*a.field_, a.field_->add(a.v_, b.v_)}; }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return {*a.field_, a.field_->sub(a.v_, b.v_)}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return {*a.field_, a.field_->mul(a.v_, b.v_)}; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return {*a.field_, a.field_->div(a.v_, b.v_)}; }
  Scalar operator-() const { return {*field_, field_->neg(v_)}; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  const K* field_;
  Value<K> v_;
};

using AnyField = std::variant<FiniteField, RationalField>;

AnyField make_field(const FieldSpec& spec);

/// Owning field element that knows its field. Arithmetic between elements of
/// different fields throws FieldError(mixed_fields).
class FieldElement {
 public:
  using Repr = std::variant<Fq, mpq_class>;

  FieldElement(AnyField field, Repr value);

  static FieldElement parse(const AnyField& field, std::string_view text);
  static FieldElement from_int(const AnyField& field, std::int64_t n);

  const AnyField& field() const noexcept { return field_; }
  const FieldSpec& spec() const;
  const Repr& repr() const noexcept { return value_; }
  bool is_zero() const;
  std::string to_string() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  /// Equal iff same field and identical canonical representation.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  AnyField field_;
  Repr value_;
};

FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::int64_t n);

bool same_field(const AnyField& a, const AnyField& b);
const FieldSpec& spec_of(const AnyField& field);

/// All elements in deterministic order. Throws FieldError(not_enumerable) on Q.
std::vector<FieldElement> enumerate_elements(const FieldSpec& spec);

}  // namespace ecalg
