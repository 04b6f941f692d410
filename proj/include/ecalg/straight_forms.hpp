#pragma once

// Straight algebras normalized to e^2 = f. Such an algebra is S(p, q, a, b, c, d)
// with rows (0, 1), (p, q), (a, b), (c, d).

#include <optional>
#include <stdexcept>

#include "ecalg/algebra.hpp"
#include "ecalg/predicates.hpp"

namespace ecalg {

class CurledAlgebraError : public std::invalid_argument {
 public:
  CurledAlgebraError() : std::invalid_argument("algebra is curled: x^2 lies in span(x) for every x") {}
};

template <ExactField K>
struct SForm {
  using V = Value<K>;

  K field;
  V p, q, a, b, c, d;

  StructureMatrix<K> matrix() const {
    return StructureMatrix<K>(field, {field.zero(), field.one(), p, q, a, b, c, d});
  }

  /// Requires the e^2 row to be exactly (0, 1).
  static SForm from_matrix(const StructureMatrix<K>& A) {
    const K& k = A.field();
    if (!k.is_zero(A.a(1)) || !(A.b(1) == k.one())) {
      throw std::invalid_argument("structure matrix is not in S-form (e^2 != f)");
    }
    return SForm{k, A.a(2), A.b(2), A.a(3), A.b(3), A.a(4), A.b(4)};
  }

  static SForm from_ints(K field, std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t d) {
    auto v = [&](std::int64_t n) { return field.from_int(n); };
    return SForm{field, v(p), v(q), v(a), v(b), v(c), v(d)};
  }

  bool is_rank_one_shape() const { return field.is_zero(p) && field.is_zero(a) && field.is_zero(c); }

  friend bool operator==(const SForm& x, const SForm& y) {
    return x.field == y.field && x.p == y.p && x.q == y.q && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

template <ExactField K>
struct Normalization {
  SForm<K> form;
  BasisChange<K> basis_change;  // transform(A, basis_change) == form.matrix()
  AlgebraElement<K> witness;    // new basis is (witness, witness^2)
};

/// Re-expresses a straight algebra in the basis (x, x^2) for its first
/// straightening witness x.
template <ExactField K>
Normalization<K> normalize_straight(const StructureMatrix<K>& A) {
  const K& k = A.field();
  const auto x = straightening_witness(A);
  if (!x) throw CurledAlgebraError();
  const auto x2 = square(A, *x);
  const BasisChange<K> to_new(k, x->alpha, x->beta, x2.alpha, x2.beta);
  const auto X = to_new.inverse();
  const auto normalized = transform(A, X);
  return {SForm<K>::from_matrix(normalized), X, *x};
}

/// The five equations in (p, q, a, b, c, d) equivalent to endo-commutativity
/// of S(p, q, a, b, c, d).
template <ExactField K>
bool ec_system4(const SForm<K>& S) {
  const K& k = S.field;
  const Scalar<K> p(k, S.p), q(k, S.q), a(k, S.a), b(k, S.b), c(k, S.c), d(k, S.d);
  return p * q + p * c == p * b * b + a * a * b + a * b * c &&
         p * (c - a) == (b - d) * (p * (b + d) - q * (a + c)) &&
         p * (d - b) == a * a - c * c &&
         q * q + p * d == a * a + q * b * b + a * b * b + a * b * d &&
         q * (d - b) == a * b - c * d;
}

/// ec_system4 restricted to p = a = c = 0: q^2 = q b^2 and q (d - b) = 0.
template <ExactField K>
bool rank1_ec_membership(const K& k, const Value<K>& q_, const Value<K>& b_, const Value<K>& d_) {
  const Scalar<K> q(k, q_), b(k, b_), d(k, d_);
  return q * q == q * b * b && (q * (d - b)).is_zero();
}

/// The eight equations equivalent to tilde(X) S' = S X for X = (x, y; z, w).
template <ExactField K>
bool check_iso_witness_system5(const SForm<K>& S, const SForm<K>& T, const Value<K>& x_, const Value<K>& y_,
                               const Value<K>& z_, const Value<K>& w_) {
  const K& k = S.field;
  if (!(k == T.field)) throw FieldError(FieldErrc::mixed_fields, "S-forms over different fields");
  const Scalar<K> x(k, x_), y(k, y_), z(k, z_), w(k, w_);
  if ((x * w - y * z).is_zero()) throw std::domain_error("witness matrix is singular");
  const Scalar<K> p(k, S.p), q(k, S.q), a(k, S.a), b(k, S.b), c(k, S.c), d(k, S.d);
  const Scalar<K> p2(k, T.p), q2(k, T.q), a2(k, T.a), b2(k, T.b), c2(k, T.c), d2(k, T.d);
  return p2 * y * y + (a2 + c2) * x * y == z &&
         x * x + q2 * y * y + (b2 + d2) * x * y == w &&
         p2 * w * w + (a2 + c2) * z * w == p * x + q * z &&
         z * z + q2 * w * w + (b2 + d2) * z * w == p * y + q * w &&
         p2 * y * w + a2 * x * w + c2 * y * z == a * x + b * z &&
         x * z + q2 * y * w + b2 * x * w + d2 * y * z == a * y + b * w &&
         p2 * y * w + a2 * y * z + c2 * x * w == c * x + d * z &&
         x * z + q2 * y * w + b2 * y * z + d2 * x * w == c * y + d * w;
}

/// Witness (x, y, w) for an isomorphism between rank-one S-forms; the basis
/// change is (x, y; 0, w).
template <ExactField K>
struct Rank1Witness {
  Value<K> x, y, w;

  BasisChange<K> basis_change(const K& k) const { return BasisChange<K>(k, x, y, k.zero(), w); }
  friend bool operator==(const Rank1Witness&, const Rank1Witness&) = default;
};

/// x^2 + q'y^2 + (b' + d')xy = w, q'w = q, q'y + b'x = b, q'y + d'x = d.
template <ExactField K>
bool check_rank1_system7(const SForm<K>& S, const SForm<K>& T, const Value<K>& x_, const Value<K>& y_,
                         const Value<K>& w_) {
  const K& k = S.field;
  const Scalar<K> x(k, x_), y(k, y_), w(k, w_);
  const Scalar<K> q(k, S.q), b(k, S.b), d(k, S.d);
  const Scalar<K> q2(k, T.q), b2(k, T.b), d2(k, T.d);
  return x * x + q2 * y * y + (b2 + d2) * x * y == w && q2 * w == q && q2 * y + b2 * x == b && q2 * y + d2 * x == d;
}

/// First (x, y, w) with xw != 0 in lexicographic order satisfying
/// check_rank1_system7, or nullopt when S and T are not isomorphic.
template <EnumerableField K>
std::optional<Rank1Witness<K>> rank1_iso_search(const SForm<K>& S, const SForm<K>& T) {
  const K& k = S.field;
  if (!(k == T.field)) throw FieldError(FieldErrc::mixed_fields, "S-forms over different fields");
  if (!S.is_rank_one_shape() || !T.is_rank_one_shape()) {
    throw std::invalid_argument("rank-one search needs p = a = c = 0 on both sides");
  }
  const auto elems = k.elements();
  for (const auto& x : elems) {
    if (k.is_zero(x)) continue;
    for (const auto& y : elems)
      for (const auto& w : elems) {
        if (k.is_zero(w)) continue;
        if (check_rank1_system7(S, T, x, y, w)) return Rank1Witness<K>{x, y, w};
      }
  }
  return std::nullopt;
}

}  // namespace ecalg
