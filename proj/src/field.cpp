#include "ecalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace ecalg {

namespace detail {

struct FiniteFieldData {
  FieldSpec spec;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint32_t q = 0;
  std::vector<std::uint16_t> add, mul, neg, inv;  // empty above kTableLimit
};

}  // namespace detail

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::uint32_t reduce_coefficient(std::uint64_t value, bool negative, std::uint32_t p) {
  auto r = static_cast<std::uint32_t>(value % p);
  return negative && r != 0 ? p - r : r;
}

// Polynomial over F_p in x, e.g. "2x^2+x+1", "x-1", "3". Coefficients are
// returned low to high with trailing zeros trimmed.
std::vector<std::uint32_t> parse_polynomial(std::string_view raw, std::uint32_t p) {
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw FieldError(FieldErrc::malformed, "empty polynomial");
  std::vector<std::uint32_t> coeffs;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const char* why) {
    throw FieldError(FieldErrc::malformed, "polynomial '" + text + "' at position " +
                                               std::to_string(at) + ": " + why);
  };
  bool first = true;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      fail(pos, "expected '+' or '-'");
    }
    first = false;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::uint64_t coeff = 1;
    const bool has_digits = pos > start;
    if (has_digits && !parse_u64(std::string_view(text).substr(start, pos - start), coeff)) {
      fail(start, "coefficient out of range");
    }
    std::uint64_t exponent = 0;
    if (pos < text.size() && text[pos] == '*') {
      if (!has_digits) fail(pos, "'*' without coefficient");
      ++pos;
      if (pos >= text.size() || text[pos] != 'x') fail(pos, "expected 'x' after '*'");
    }
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const std::size_t es = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (!parse_u64(std::string_view(text).substr(es, pos - es), exponent) || exponent > 64) {
          fail(es, "bad exponent");
        }
      }
    } else if (!has_digits) {
      fail(pos, "expected a term");
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] = (coeffs[exponent] + reduce_coefficient(coeff, negative, p)) % p;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string format_polynomial(const std::vector<std::uint32_t>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const auto c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// Remainder of a modulo monic b over F_p.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = lead * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::vector<std::uint32_t> digits_of(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t code_of(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
  return code;
}

std::shared_ptr<const detail::FiniteFieldData> build_finite(const FieldSpec& spec) {
  auto d = std::make_shared<detail::FiniteFieldData>();
  d->spec = spec;
  d->p = spec.characteristic;
  d->k = spec.degree;
  const std::uint64_t q = spec.order();
  if (q > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw FieldError(FieldErrc::unsupported, "field order too large: " + spec.to_string());
  }
  d->q = static_cast<std::uint32_t>(q);
  if (d->q > FiniteField::kTableLimit) {
    if (spec.kind == FieldKind::extension) {
      throw FieldError(FieldErrc::unsupported,
                       "extension fields above order " + std::to_string(FiniteField::kTableLimit) +
                           " are not supported");
    }
    return d;
  }
  const std::uint32_t n = d->q;
  d->add.resize(std::size_t{n} * n);
  d->mul.resize(std::size_t{n} * n);
  d->neg.resize(n);
  d->inv.resize(n, 0);
  std::vector<std::vector<std::uint32_t>> digits(n);
  for (std::uint32_t a = 0; a < n; ++a) digits[a] = digits_of(a, d->p, d->k);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::vector<std::uint32_t> sum(d->k), prod(2 * d->k - 1, 0);
      for (std::uint32_t i = 0; i < d->k; ++i) sum[i] = (digits[a][i] + digits[b][i]) % d->p;
      for (std::uint32_t i = 0; i < d->k; ++i) {
        for (std::uint32_t j = 0; j < d->k; ++j) {
          prod[i + j] = static_cast<std::uint32_t>(
              (prod[i + j] + std::uint64_t{digits[a][i]} * digits[b][j]) % d->p);
        }
      }
      if (spec.kind == FieldKind::extension) prod = poly_mod(prod, spec.modulus, d->p);
      prod.resize(d->k, 0);
      d->add[a * n + b] = static_cast<std::uint16_t>(code_of(sum, d->p));
      d->mul[a * n + b] = static_cast<std::uint16_t>(code_of(prod, d->p));
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (d->add[a * n + b] == 0) d->neg[a] = static_cast<std::uint16_t>(b);
      if (d->mul[a * n + b] == 1) d->inv[a] = static_cast<std::uint16_t>(b);
    }
  }
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg < 1) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // every monic polynomial of degree d
    const std::uint64_t count = pow_u64(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      auto divisor = digits_of(static_cast<std::uint32_t>(code), p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      auto r = poly_mod(poly, divisor, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw FieldError(FieldErrc::not_prime, std::to_string(p) + " is not prime");
  FieldSpec s;
  s.kind = FieldKind::prime;
  s.characteristic = p;
  s.degree = 1;
  return s;
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw FieldError(FieldErrc::not_prime, std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 3) {
    throw FieldError(FieldErrc::malformed, "extension modulus must have degree >= 2");
  }
  if (modulus.back() != 1) throw FieldError(FieldErrc::malformed, "modulus is not monic");
  if (!is_irreducible(modulus, p)) {
    throw FieldError(FieldErrc::reducible,
                     "modulus " + format_polynomial(modulus) + " is reducible over F" + std::to_string(p));
  }
  FieldSpec s;
  s.kind = FieldKind::extension;
  s.characteristic = p;
  s.degree = static_cast<std::uint32_t>(modulus.size() - 1);
  s.modulus = std::move(modulus);
  return s;
}

FieldSpec FieldSpec::rational() { return FieldSpec{}; }

std::uint64_t FieldSpec::order() const noexcept {
  if (kind == FieldKind::rational) return 0;
  return pow_u64(characteristic, degree);
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::prime:
      return "F" + std::to_string(characteristic);
    case FieldKind::extension:
      return "F" + std::to_string(order()) + ":" + format_polynomial(modulus);
  }
  return {};
}

FieldSpec parse_field_spec(std::string_view raw) {
  const std::string text = strip_spaces(raw);
  if (text == "Q") return FieldSpec::rational();
  if (text.size() < 2 || text[0] != 'F') {
    throw FieldError(FieldErrc::malformed, "field spec '" + text + "': expected 'Q' or 'F<order>'");
  }
  const auto colon = text.find(':');
  const std::string_view order_text = std::string_view(text).substr(1, colon == std::string::npos
                                                                            ? std::string::npos
                                                                            : colon - 1);
  std::uint64_t order = 0;
  if (!parse_u64(order_text, order)) {
    throw FieldError(FieldErrc::malformed, "field spec '" + text + "': bad order '" +
                                               std::string(order_text) + "'");
  }
  // order = p^k with p the smallest prime factor
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= order; ++d) {
    if (order % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = order;
  std::uint32_t k = 0;
  std::uint64_t rest = order;
  while (p >= 2 && rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (order < 2 || rest != 1 || p > std::numeric_limits<std::uint32_t>::max()) {
    throw FieldError(FieldErrc::not_prime, "field order " + std::to_string(order) +
                                               " is not a prime power");
  }
  const auto p32 = static_cast<std::uint32_t>(p);
  if (colon == std::string::npos) {
    if (k != 1) {
      throw FieldError(FieldErrc::malformed, "field spec '" + text +
                                                 "': extension fields need ':<modulus>'");
    }
    return FieldSpec::prime(p32);
  }
  if (k == 1) {
    throw FieldError(FieldErrc::malformed, "field spec '" + text + "': prime fields take no modulus");
  }
  auto modulus = parse_polynomial(std::string_view(text).substr(colon + 1), p32);
  if (modulus.size() != k + 1) {
    throw FieldError(FieldErrc::malformed, "modulus degree " +
                                               std::to_string(modulus.empty() ? 0 : modulus.size() - 1) +
                                               " does not match order " + std::to_string(order));
  }
  return FieldSpec::extension(p32, std::move(modulus));
}

// ---------------------------------------------------------------------------

FiniteField::FiniteField(const FieldSpec& spec) {
  if (spec.kind == FieldKind::rational) {
    throw FieldError(FieldErrc::not_enumerable, "Q is not a finite field");
  }
  data_ = build_finite(spec);
  p_ = data_->p;
  q_ = data_->q;
  if (!data_->add.empty()) {
    add_ = data_->add.data();
    mul_ = data_->mul.data();
    neg_ = data_->neg.data();
  }
}

const FieldSpec& FiniteField::spec() const noexcept { return data_->spec; }

Fq FiniteField::inv(Fq a) const {
  if (a.code == 0) throw FieldError(FieldErrc::division_by_zero, "inverse of zero");
  if (!data_->inv.empty()) return {data_->inv[a.code]};
  return pow(a, static_cast<std::int64_t>(p_) - 2);
}

Fq FiniteField::pow(Fq a, std::int64_t n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Fq r = one();
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Fq FiniteField::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Fq FiniteField::element(std::uint32_t index) const {
  if (index >= q_) throw std::out_of_range("element index out of range");
  return {index};
}

std::vector<Fq> FiniteField::elements() const {
  std::vector<Fq> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

std::string FiniteField::format(Fq a) const {
  if (data_->spec.kind == FieldKind::prime) return std::to_string(a.code);
  auto digits = digits_of(a.code, p_, data_->k);
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return format_polynomial(digits);
}

Fq FiniteField::parse(std::string_view raw) const {
  if (data_->spec.kind == FieldKind::prime) {
    std::string text = strip_spaces(raw);
    bool negative = false;
    std::string_view digits = text;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      negative = digits[0] == '-';
      digits.remove_prefix(1);
    }
    std::uint64_t v = 0;
    if (!parse_u64(digits, v)) {
      throw FieldError(FieldErrc::malformed, "'" + text + "' is not an element of " + spec().to_string());
    }
    return {reduce_coefficient(v, negative, p_)};
  }
  auto coeffs = parse_polynomial(raw, p_);
  if (coeffs.size() > data_->k) coeffs = poly_mod(coeffs, data_->spec.modulus, p_);
  coeffs.resize(data_->k, 0);
  return {code_of(coeffs, p_)};
}

// ---------------------------------------------------------------------------

const FieldSpec& RationalField::spec() const noexcept {
  static const FieldSpec q = FieldSpec::rational();
  return q;
}

mpq_class RationalField::inv(const mpq_class& a) const {
  if (sgn(a) == 0) throw FieldError(FieldErrc::division_by_zero, "inverse of zero");
  return 1 / a;
}

mpq_class RationalField::pow(const mpq_class& a, std::int64_t n) const {
  mpq_class base = n < 0 ? inv(a) : a;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  mpq_class r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

mpq_class RationalField::parse(std::string_view raw) const {
  const std::string text = strip_spaces(raw);
  auto bad = [&]() -> FieldError {
    return FieldError(FieldErrc::malformed, "'" + text + "' is not a rational number");
  };
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw FieldError(FieldErrc::division_by_zero, "zero denominator in '" + text + "'");
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------

AnyField make_field(const FieldSpec& spec) {
  if (spec.kind == FieldKind::rational) return RationalField{};
  return FiniteField(spec);
}

const FieldSpec& spec_of(const AnyField& field) {
  return std::visit([](const auto& k) -> const FieldSpec& { return k.spec(); }, field);
}

bool same_field(const AnyField& a, const AnyField& b) {
  return a.index() == b.index() && spec_of(a) == spec_of(b);
}

FieldElement::FieldElement(AnyField field, Repr value) : field_(std::move(field)), value_(std::move(value)) {
  const bool ok = std::holds_alternative<FiniteField>(field_) == std::holds_alternative<Fq>(value_);
  if (!ok) throw FieldError(FieldErrc::mixed_fields, "value representation does not match field");
  if (const auto* f = std::get_if<FiniteField>(&field_)) {
    if (std::get<Fq>(value_).code >= f->order()) {
      throw FieldError(FieldErrc::malformed, "element code out of range");
    }
  }
}

FieldElement FieldElement::parse(const AnyField& field, std::string_view text) {
  return std::visit([&](const auto& k) { return FieldElement(field, Repr(k.parse(text))); }, field);
}

FieldElement FieldElement::from_int(const AnyField& field, std::int64_t n) {
  return std::visit([&](const auto& k) { return FieldElement(field, Repr(k.from_int(n))); }, field);
}

const FieldSpec& FieldElement::spec() const { return spec_of(field_); }

bool FieldElement::is_zero() const {
  return std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        return k.is_zero(std::get<Value<K>>(value_));
      },
      field_);
}

std::string FieldElement::to_string() const {
  return std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        return k.format(std::get<Value<K>>(value_));
      },
      field_);
}

namespace {

template <class Op>
FieldElement binary(const FieldElement& a, const FieldElement& b, Op op) {
  if (!same_field(a.field(), b.field())) {
    throw FieldError(FieldErrc::mixed_fields,
                     "operands from " + a.spec().to_string() + " and " + b.spec().to_string());
  }
  return std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        const auto& x = std::get<Value<K>>(a.repr());
        const auto& y = std::get<Value<K>>(b.repr());
        return FieldElement(a.field(), FieldElement::Repr(op(k, x, y)));
      },
      a.field());
}

template <class Op>
FieldElement unary(const FieldElement& a, Op op) {
  return std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        return FieldElement(a.field(), FieldElement::Repr(op(k, std::get<Value<K>>(a.repr()))));
      },
      a.field());
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return binary(a, b, [](const auto& k, const auto& x, const auto& y) { return k.add(x, y); });
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return binary(a, b, [](const auto& k, const auto& x, const auto& y) { return k.sub(x, y); });
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return binary(a, b, [](const auto& k, const auto& x, const auto& y) { return k.mul(x, y); });
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return binary(a, b, [](const auto& k, const auto& x, const auto& y) { return k.div(x, y); });
}
FieldElement FieldElement::operator-() const {
  return unary(*this, [](const auto& k, const auto& x) { return k.neg(x); });
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.value_ == b.value_;
}

FieldElement inv(const FieldElement& a) {
  return unary(a, [](const auto& k, const auto& x) { return k.inv(x); });
}

FieldElement pow(const FieldElement& a, std::int64_t n) {
  return unary(a, [n](const auto& k, const auto& x) { return k.pow(x, n); });
}

std::vector<FieldElement> enumerate_elements(const FieldSpec& spec) {
  if (!spec.enumerable()) throw FieldError(FieldErrc::not_enumerable, "Q cannot be enumerated");
  FiniteField k(spec);
  AnyField any = k;
  std::vector<FieldElement> out;
  out.reserve(k.order());
  for (Fq v : k.elements()) out.emplace_back(any, FieldElement::Repr(v));
  return out;
}

}  // namespace ecalg
