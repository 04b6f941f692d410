#pragma once

// Two-dimensional algebras given by structure matrices, and the GL2 action
// on them.
//
// A structure matrix lists, in the basis {e, f}, the rows
//   e^2 = a1 e + b1 f,  f^2 = a2 e + b2 f,  ef = a3 e + b3 f,  fe = a4 e + b4 f.
// Elements are coordinate row vectors (alpha, beta) = alpha e + beta f.
//
// transform(A, X) = tilde(X^-1) A X is A presented in the basis whose
// coordinate rows are the rows of X^-1. The induced isomorphism sends a
// coordinate row u of A to u X in transform(A, X).

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ecalg/field.hpp"
#include "ecalg/linalg.hpp"

namespace ecalg {

enum class Row : std::size_t { e2 = 0, f2 = 1, ef = 2, fe = 3 };

template <ExactField K>
struct AlgebraElement {
  Value<K> alpha;
  Value<K> beta;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

template <ExactField K>
AlgebraElement<K> basis_e(const K& k) { return {k.one(), k.zero()}; }
template <ExactField K>
AlgebraElement<K> basis_f(const K& k) { return {k.zero(), k.one()}; }

template <ExactField K>
AlgebraElement<K> add(const K& k, const AlgebraElement<K>& u, const AlgebraElement<K>& v) {
  return {k.add(u.alpha, v.alpha), k.add(u.beta, v.beta)};
}
template <ExactField K>
AlgebraElement<K> scale(const K& k, const Value<K>& s, const AlgebraElement<K>& u) {
  return {k.mul(s, u.alpha), k.mul(s, u.beta)};
}
template <ExactField K>
bool is_zero(const K& k, const AlgebraElement<K>& u) {
  return k.is_zero(u.alpha) && k.is_zero(u.beta);
}
/// det of the 2x2 matrix with rows u, v; zero iff u, v are linearly dependent.
template <ExactField K>
Value<K> wedge(const K& k, const AlgebraElement<K>& u, const AlgebraElement<K>& v) {
  return k.sub(k.mul(u.alpha, v.beta), k.mul(u.beta, v.alpha));
}

template <ExactField K>
class StructureMatrix {
 public:
  using V = Value<K>;
  using Entries = std::array<V, 8>;  // a1, b1, a2, b2, a3, b3, a4, b4

  StructureMatrix(K field, Entries entries) : field_(std::move(field)), entries_(std::move(entries)) {}

  static StructureMatrix zero(K field) {
    Entries e;
    e.fill(field.zero());
    return StructureMatrix(std::move(field), std::move(e));
  }
  static StructureMatrix from_ints(K field, const std::array<std::int64_t, 8>& values) {
    Entries e;
    for (std::size_t i = 0; i < 8; ++i) e[i] = field.from_int(values[i]);
    return StructureMatrix(std::move(field), std::move(e));
  }
  static StructureMatrix from_rows(K field, const AlgebraElement<K>& e2, const AlgebraElement<K>& f2,
                                   const AlgebraElement<K>& ef, const AlgebraElement<K>& fe) {
    return StructureMatrix(std::move(field),
                           Entries{e2.alpha, e2.beta, f2.alpha, f2.beta, ef.alpha, ef.beta, fe.alpha, fe.beta});
  }

  const K& field() const noexcept { return field_; }
  const Entries& entries() const noexcept { return entries_; }

  /// Coefficients a_i and b_i for i = 1..4, in the usual row order.
  const V& a(std::size_t i) const { return entries_.at(2 * (i - 1)); }
  const V& b(std::size_t i) const { return entries_.at(2 * (i - 1) + 1); }

  AlgebraElement<K> row(Row r) const {
    const auto i = static_cast<std::size_t>(r);
    return {entries_[2 * i], entries_[2 * i + 1]};
  }

  Matrix<K> as_matrix() const {
    Matrix<K> m(4, std::vector<V>(2));
    for (std::size_t i = 0; i < 4; ++i) {
      m[i][0] = entries_[2 * i];
      m[i][1] = entries_[2 * i + 1];
    }
    return m;
  }

  /// Entrywise equality over the same field. Isomorphism is a separate question.
  friend bool operator==(const StructureMatrix& a, const StructureMatrix& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  K field_;
  Entries entries_;
};

/// An element of GL2(K): the matrix (x, y; z, w) with xw - yz != 0.
template <ExactField K>
class BasisChange {
 public:
  using V = Value<K>;

  BasisChange(K field, V x, V y, V z, V w)
      : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), w_(std::move(w)) {
    if (field_.is_zero(det())) throw std::domain_error("basis change matrix is singular");
  }

  static BasisChange identity(K field) {
    auto one = field.one();
    auto zero = field.zero();
    return BasisChange(std::move(field), one, zero, zero, one);
  }

  const K& field() const noexcept { return field_; }
  const V& x() const noexcept { return x_; }
  const V& y() const noexcept { return y_; }
  const V& z() const noexcept { return z_; }
  const V& w() const noexcept { return w_; }

  V det() const { return field_.sub(field_.mul(x_, w_), field_.mul(y_, z_)); }

  BasisChange inverse() const {
    const K& k = field_;
    const V d = k.inv(det());
    return BasisChange(k, k.mul(w_, d), k.neg(k.mul(y_, d)), k.neg(k.mul(z_, d)), k.mul(x_, d));
  }

  friend BasisChange operator*(const BasisChange& a, const BasisChange& b) {
    const K& k = a.field_;
    return BasisChange(k, k.add(k.mul(a.x_, b.x_), k.mul(a.y_, b.z_)), k.add(k.mul(a.x_, b.y_), k.mul(a.y_, b.w_)),
                       k.add(k.mul(a.z_, b.x_), k.mul(a.w_, b.z_)), k.add(k.mul(a.z_, b.y_), k.mul(a.w_, b.w_)));
  }

  Matrix<K> as_matrix() const { return {{x_, y_}, {z_, w_}}; }

  friend bool operator==(const BasisChange& a, const BasisChange& b) {
    return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_ && a.w_ == b.w_;
  }

 private:
  K field_;
  V x_, y_, z_, w_;
};

/// uv = alpha*gamma e^2 + alpha*delta ef + beta*gamma fe + beta*delta f^2.
template <ExactField K>
AlgebraElement<K> multiply(const StructureMatrix<K>& A, const AlgebraElement<K>& u, const AlgebraElement<K>& v) {
  const K& k = A.field();
  const auto& m = A.entries();
  const auto ag = k.mul(u.alpha, v.alpha);
  const auto ad = k.mul(u.alpha, v.beta);
  const auto bg = k.mul(u.beta, v.alpha);
  const auto bd = k.mul(u.beta, v.beta);
  auto coord = [&](std::size_t c) {
    return k.add(k.add(k.mul(ag, m[0 + c]), k.mul(ad, m[4 + c])), k.add(k.mul(bg, m[6 + c]), k.mul(bd, m[2 + c])));
  };
  return {coord(0), coord(1)};
}

template <ExactField K>
AlgebraElement<K> square(const StructureMatrix<K>& A, const AlgebraElement<K>& u) {
  return multiply(A, u, u);
}

/// The 4x4 matrix with rows (x^2, y^2, xy, xy), (z^2, w^2, zw, zw),
/// (xz, yw, xw, yz), (xz, yw, yz, xw) for X = (x, y; z, w).
template <ExactField K>
Matrix<K> tilde(const BasisChange<K>& X) {
  const K& k = X.field();
  const auto &x = X.x(), &y = X.y(), &z = X.z(), &w = X.w();
  const auto xy = k.mul(x, y), zw = k.mul(z, w), xz = k.mul(x, z), yw = k.mul(y, w);
  const auto xw = k.mul(x, w), yz = k.mul(y, z);
  return {
      {k.mul(x, x), k.mul(y, y), xy, xy},
      {k.mul(z, z), k.mul(w, w), zw, zw},
      {xz, yw, xw, yz},
      {xz, yw, yz, xw},
  };
}

/// tilde(X^-1) * A * X.
template <ExactField K>
StructureMatrix<K> transform(const StructureMatrix<K>& A, const BasisChange<K>& X) {
  const K& k = A.field();
  if (!(k == X.field())) throw FieldError(FieldErrc::mixed_fields, "algebra and basis change over different fields");
  const auto T = tilde(X.inverse());
  const auto& m = A.entries();
  typename StructureMatrix<K>::Entries out;
  for (std::size_t i = 0; i < 4; ++i) {
    // row i of T*A
    auto ra = k.zero(), rb = k.zero();
    for (std::size_t t = 0; t < 4; ++t) {
      ra = k.add(ra, k.mul(T[i][t], m[2 * t]));
      rb = k.add(rb, k.mul(T[i][t], m[2 * t + 1]));
    }
    out[2 * i] = k.add(k.mul(ra, X.x()), k.mul(rb, X.z()));
    out[2 * i + 1] = k.add(k.mul(ra, X.y()), k.mul(rb, X.w()));
  }
  return StructureMatrix<K>(k, std::move(out));
}

/// Coordinates of u in transform(A, X): the row vector u X.
template <ExactField K>
AlgebraElement<K> map_element(const BasisChange<K>& X, const AlgebraElement<K>& u) {
  const K& k = X.field();
  return {k.add(k.mul(u.alpha, X.x()), k.mul(u.beta, X.z())), k.add(k.mul(u.alpha, X.y()), k.mul(u.beta, X.w()))};
}

template <ExactField K>
std::size_t algebra_rank(const StructureMatrix<K>& A) {
  return matrix_rank(A.field(), A.as_matrix());
}

/// All of GL2(K), identity first, then the remaining invertible (x, y, z, w)
/// in lexicographic enumeration order.
template <EnumerableField K>
std::vector<BasisChange<K>> general_linear_group(const K& k) {
  const auto elems = k.elements();
  const std::uint64_t q = elems.size();
  std::vector<BasisChange<K>> out;
  out.reserve((q * q - 1) * (q * q - q));
  const auto id = BasisChange<K>::identity(k);
  out.push_back(id);
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        for (const auto& w : elems) {
          if (k.is_zero(k.sub(k.mul(x, w), k.mul(y, z)))) continue;
          BasisChange<K> X(k, x, y, z, w);
          if (!(X == id)) out.push_back(std::move(X));
        }
  if (out.size() != (q * q - 1) * (q * q - q)) throw std::logic_error("|GL2(K)| self-check failed");
  return out;
}

/// Every element of K^2 in enumeration order. The first coordinate varies
/// fastest, so e precedes f: 0, e, 2e, ..., f, e+f, ...
template <EnumerableField K>
std::vector<AlgebraElement<K>> all_elements(const K& k) {
  const auto elems = k.elements();
  std::vector<AlgebraElement<K>> out;
  out.reserve(elems.size() * elems.size());
  for (const auto& beta : elems)
    for (const auto& alpha : elems) out.push_back({alpha, beta});
  return out;
}

}  // namespace ecalg
