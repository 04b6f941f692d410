#pragma once

// Decidable properties of a two-dimensional algebra. Where a property has both
// a closed-form test and a pointwise definition, both are provided; the
// pointwise versions need a finite field.

#include <array>
#include <optional>
#include <vector>

#include "ecalg/algebra.hpp"
#include "ecalg/linalg.hpp"

namespace ecalg {

/// x^2 y^2 = (xy)^2 for every pair x, y in K^2.
template <EnumerableField K>
bool is_ec_bruteforce(const StructureMatrix<K>& A) {
  const auto points = all_elements(A.field());
  std::vector<AlgebraElement<K>> squares;
  squares.reserve(points.size());
  for (const auto& u : points) squares.push_back(square(A, u));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      const auto uv = multiply(A, points[i], points[j]);
      if (!(multiply(A, squares[i], squares[j]) == square(A, uv))) return false;
    }
  }
  return true;
}

/// The eight cubic equations in (a1, b1, ..., a4, b4) characterizing
/// endo-commutativity. Valid over any field.
template <ExactField K>
bool is_ec_criterion(const StructureMatrix<K>& A) {
  const K& k = A.field();
  const Scalar<K> a1(k, A.a(1)), b1(k, A.b(1)), a2(k, A.a(2)), b2(k, A.b(2));
  const Scalar<K> a3(k, A.a(3)), b3(k, A.b(3)), a4(k, A.a(4)), b4(k, A.b(4));
  const auto a1a1 = a1 * a1, a3a3 = a3 * a3, a4a4 = a4 * a4, b2b2 = b2 * b2;
  const auto b3b3 = b3 * b3, b4b4 = b4 * b4;
  const auto lhs13 = a1a1 * a2 + b1 * a2 * b2;  // shared by the first two
  const auto lhs56 = a1 * b1 * a2 + b1 * b2b2;  // shared by the fifth and sixth
  return lhs13 + a1 * b2 * a3 + b1 * a2 * a4 == a1 * a3a3 + a2 * b3b3 + a3a3 * b3 + a3 * b3 * a4 &&
         lhs13 + b1 * a2 * a3 + a1 * b2 * a4 == a1 * a4a4 + a2 * b4b4 + a3 * a4 * b4 + a4a4 * b4 &&
         a1a1 * a4 + b1 * a4a4 + b1 * a2 * b4 + a1 * a3 * b4 == a1a1 * a3 + b1 * a2 * b3 + b1 * a3a3 + a1 * b3 * a4 &&
         a2 * (a1 * a4 + a4 * b4 + b2 * b4) == a2 * (a1 * a3 + b2 * b3 + a3 * b3) &&
         lhs56 + a1 * b2 * b3 + b1 * a2 * b4 == b1 * a3a3 + b2 * b3b3 + a3 * b3b3 + a3 * b3 * b4 &&
         lhs56 + b1 * a2 * b3 + a1 * b2 * b4 == b1 * a4a4 + b2 * b4b4 + b3 * a4 * b4 + a4 * b4b4 &&
         b1 * (a1 * a4 + a4 * b4 + b2 * b4) == b1 * (a1 * a3 + b2 * b3 + a3 * b3) &&
         b1 * a2 * a4 + b2 * b3 * a4 + b2b2 * b4 + a2 * b4b4 == b1 * a2 * a3 + b2b2 * b3 + a2 * b3b3 + b2 * a3 * b4;
}

/// Coefficients of det(x, x^2) as a binary cubic in (alpha, beta):
/// b1 alpha^3 + (b3 + b4 - a1) alpha^2 beta + (b2 - a3 - a4) alpha beta^2 - a2 beta^3.
template <ExactField K>
std::array<Value<K>, 4> straightness_cubic(const StructureMatrix<K>& A) {
  const K& k = A.field();
  return {A.b(1), k.sub(k.add(A.b(3), A.b(4)), A.a(1)), k.sub(k.sub(A.b(2), A.a(3)), A.a(4)), k.neg(A.a(2))};
}

/// First x (in enumeration order over finite fields) with x and x^2 linearly
/// independent; nullopt when A is curled.
///
/// Finite fields scan every point, since a nonzero cubic can vanish on all of
/// F2^2 or F3^2. Over Q the cubic is nonzero iff some point is a witness, and
/// a nonzero binary cubic has at most three projective zeros, so five
/// pairwise independent probes always suffice.
template <ExactField K>
std::optional<AlgebraElement<K>> straightening_witness(const StructureMatrix<K>& A) {
  const K& k = A.field();
  auto works = [&](const AlgebraElement<K>& x) { return !k.is_zero(wedge(k, x, square(A, x))); };
  if constexpr (EnumerableField<K>) {
    for (const auto& x : all_elements(k)) {
      if (works(x)) return x;
    }
    return std::nullopt;
  } else {
    const auto cubic = straightness_cubic(A);
    bool nonzero = false;
    for (const auto& c : cubic) nonzero = nonzero || !k.is_zero(c);
    if (!nonzero) return std::nullopt;
    constexpr std::array<std::array<int, 2>, 5> probes{{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}}};
    for (const auto& [s, t] : probes) {
      AlgebraElement<K> x{k.from_int(s), k.from_int(t)};
      if (works(x)) return x;
    }
    throw std::logic_error("nonzero straightness cubic with no witness among probes");
  }
}

template <ExactField K>
bool is_straight(const StructureMatrix<K>& A) {
  return straightening_witness(A).has_value();
}

template <ExactField K>
bool is_commutative(const StructureMatrix<K>& A) {
  return A.row(Row::ef) == A.row(Row::fe);
}

/// uv + vu = 0 for all u, v, checked on the basis: 2e^2 = 2f^2 = 0 and ef + fe = 0.
template <ExactField K>
bool is_anti_commutative(const StructureMatrix<K>& A) {
  const K& k = A.field();
  const auto two = k.from_int(2);
  return is_zero(k, scale(k, two, A.row(Row::e2))) && is_zero(k, scale(k, two, A.row(Row::f2))) &&
         is_zero(k, add(k, A.row(Row::ef), A.row(Row::fe)));
}

template <EnumerableField K>
bool is_anti_commutative_bruteforce(const StructureMatrix<K>& A) {
  const K& k = A.field();
  const auto points = all_elements(k);
  for (const auto& u : points)
    for (const auto& v : points) {
      if (!is_zero(k, add(k, multiply(A, u, v), multiply(A, v, u)))) return false;
    }
  return true;
}

/// (uv)w = u(vw) on all eight basis triples.
template <ExactField K>
bool is_associative(const StructureMatrix<K>& A) {
  const K& k = A.field();
  const std::array<AlgebraElement<K>, 2> basis{basis_e(k), basis_f(k)};
  for (const auto& u : basis)
    for (const auto& v : basis)
      for (const auto& w : basis) {
        if (!(multiply(A, multiply(A, u, v), w) == multiply(A, u, multiply(A, v, w)))) return false;
      }
  return true;
}

template <EnumerableField K>
bool is_associative_bruteforce(const StructureMatrix<K>& A) {
  const auto points = all_elements(A.field());
  for (const auto& u : points)
    for (const auto& v : points) {
      const auto uv = multiply(A, u, v);
      for (const auto& w : points) {
        if (!(multiply(A, uv, w) == multiply(A, u, multiply(A, v, w)))) return false;
      }
    }
  return true;
}

/// Two-sided identity u = alpha e + beta f, from the linear system
/// ue = eu = e, uf = fu = f.
template <ExactField K>
std::optional<AlgebraElement<K>> find_unit(const StructureMatrix<K>& A) {
  const K& k = A.field();
  const auto e2 = A.row(Row::e2), f2 = A.row(Row::f2), ef = A.row(Row::ef), fe = A.row(Row::fe);
  // Each product contributes two coordinate equations: alpha * P + beta * Q = target.
  const std::array<std::array<AlgebraElement<K>, 3>, 4> eqs{{
      {e2, fe, basis_e(k)},  // ue
      {e2, ef, basis_e(k)},  // eu
      {ef, f2, basis_f(k)},  // uf
      {fe, f2, basis_f(k)},  // fu
  }};
  Matrix<K> coeffs;
  std::vector<Value<K>> rhs;
  for (const auto& [P, Q, target] : eqs) {
    coeffs.push_back({P.alpha, Q.alpha});
    rhs.push_back(target.alpha);
    coeffs.push_back({P.beta, Q.beta});
    rhs.push_back(target.beta);
  }
  const auto sol = solve_linear(k, coeffs, rhs);
  if (sol.kind == SolutionKind::none) return std::nullopt;
  return AlgebraElement<K>{sol.particular[0], sol.particular[1]};
}

template <EnumerableField K>
std::optional<AlgebraElement<K>> find_unit_bruteforce(const StructureMatrix<K>& A) {
  const auto points = all_elements(A.field());
  for (const auto& u : points) {
    bool unit = true;
    for (const auto& v : points) {
      if (!(multiply(A, u, v) == v) || !(multiply(A, v, u) == v)) {
        unit = false;
        break;
      }
    }
    if (unit) return u;
  }
  return std::nullopt;
}

}  // namespace ecalg
