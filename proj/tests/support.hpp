#pragma once

// Shared fixtures and independent reference implementations for the tests.
// The oracles here deliberately avoid the library's tables and closed forms:
// field arithmetic is redone with explicit polynomial reduction, rank by
// subset independence, products by direct bilinear expansion.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ecalg/algebra.hpp"
#include "ecalg/classifier.hpp"
#include "ecalg/field.hpp"
#include "ecalg/predicates.hpp"
#include "ecalg/straight_forms.hpp"

namespace testing {

using ecalg::AlgebraElement;
using ecalg::BasisChange;
using ecalg::FiniteField;
using ecalg::Fq;
using ecalg::RationalField;
using ecalg::StructureMatrix;

using FAlg = StructureMatrix<FiniteField>;
using FElt = AlgebraElement<FiniteField>;
using FX = BasisChange<FiniteField>;
using QAlg = StructureMatrix<RationalField>;
using QX = BasisChange<RationalField>;

inline FiniteField field(const std::string& spec) { return FiniteField(ecalg::parse_field_spec(spec)); }

inline FAlg table(const FiniteField& k, const std::array<std::int64_t, 8>& v) { return FAlg::from_ints(k, v); }

inline FX basis(const FiniteField& k, std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) {
  return FX(k, k.from_int(x), k.from_int(y), k.from_int(z), k.from_int(w));
}

inline FElt elt(const FiniteField& k, std::int64_t a, std::int64_t b) { return {k.from_int(a), k.from_int(b)}; }

// Every table over k, a1 most significant.
inline std::vector<FAlg> all_tables(const FiniteField& k) {
  const auto elems = k.elements();
  const std::size_t q = elems.size();
  std::size_t n = 1;
  for (int i = 0; i < 8; ++i) n *= q;
  std::vector<FAlg> out;
  out.reserve(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    FAlg::Entries e;
    std::size_t r = idx;
    for (std::size_t j = 8; j-- > 0;) {
      e[j] = elems[r % q];
      r /= q;
    }
    out.emplace_back(k, e);
  }
  return out;
}

inline std::vector<FAlg> random_tables(const FiniteField& k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FAlg> out;
  for (std::size_t i = 0; i < n; ++i) {
    FAlg::Entries e;
    for (auto& v : e) v = k.element(static_cast<std::uint32_t>(rng() % k.order()));
    out.emplace_back(k, e);
  }
  return out;
}

inline FX random_gl2(const FiniteField& k, std::mt19937_64& rng) {
  for (;;) {
    auto r = [&] { return k.element(static_cast<std::uint32_t>(rng() % k.order())); };
    const Fq x = r(), y = r(), z = r(), w = r();
    if (!k.is_zero(k.sub(k.mul(x, w), k.mul(y, z)))) return FX(k, x, y, z, w);
  }
}

inline mpq_class random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 41) - 20;
  const long den = static_cast<long>(rng() % 9) + 1;
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

inline QX random_gl2(const RationalField& k, std::mt19937_64& rng) {
  for (;;) {
    const auto x = random_rational(rng), y = random_rational(rng), z = random_rational(rng), w = random_rational(rng);
    if (x * w - y * z != 0) return QX(k, x, y, z, w);
  }
}

// ---------------------------------------------------------------------------
// GF(p^k) by explicit polynomial arithmetic, coefficient vectors low to high.

struct PolyField {
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;  // monic, low to high

  std::size_t degree() const { return modulus.size() - 1; }

  std::vector<std::uint32_t> decode(std::uint32_t code) const {
    std::vector<std::uint32_t> c(degree());
    for (auto& v : c) {
      v = code % p;
      code /= p;
    }
    return c;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }
  // Schoolbook product then long division by the modulus.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = decode(a), y = decode(b);
    std::vector<std::uint32_t> prod(2 * degree(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (std::size_t top = prod.size(); top-- > degree();) {
      const std::uint32_t c = prod[top];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= degree(); ++i) {
        const std::size_t pos = top - degree() + i;
        prod[pos] = (prod[pos] + p * p - c * modulus[i] % p) % p;
      }
    }
    prod.resize(degree());
    return encode(prod);
  }
};

// ---------------------------------------------------------------------------
// Structure-matrix oracles over any finite field, written against the raw
// field operations only.

// uv from the definition: expand (alpha e + beta f)(gamma e + delta f).
inline FElt naive_product(const FAlg& A, const FElt& u, const FElt& v) {
  const auto& k = A.field();
  const FElt e2 = A.row(ecalg::Row::e2), f2 = A.row(ecalg::Row::f2), ef = A.row(ecalg::Row::ef),
             fe = A.row(ecalg::Row::fe);
  FElt out{k.zero(), k.zero()};
  auto acc = [&](Fq c, const FElt& r) {
    out.alpha = k.add(out.alpha, k.mul(c, r.alpha));
    out.beta = k.add(out.beta, k.mul(c, r.beta));
  };
  acc(k.mul(u.alpha, v.alpha), e2);
  acc(k.mul(u.alpha, v.beta), ef);
  acc(k.mul(u.beta, v.alpha), fe);
  acc(k.mul(u.beta, v.beta), f2);
  return out;
}

inline bool naive_ec(const FAlg& A) {
  const auto& k = A.field();
  const auto pts = ecalg::all_elements(k);
  for (const auto& x : pts)
    for (const auto& y : pts) {
      const auto lhs = naive_product(A, naive_product(A, x, x), naive_product(A, y, y));
      const auto xy = naive_product(A, x, y);
      if (!(lhs == naive_product(A, xy, xy))) return false;
    }
  return true;
}

inline bool naive_straight(const FAlg& A) {
  const auto& k = A.field();
  for (const auto& x : ecalg::all_elements(k)) {
    const auto x2 = naive_product(A, x, x);
    if (!k.is_zero(k.sub(k.mul(x.alpha, x2.beta), k.mul(x.beta, x2.alpha)))) return true;
  }
  return false;
}

// Largest set of rows admitting no nontrivial vanishing combination.
template <ecalg::EnumerableField K>
std::size_t subset_rank(const K& k, const ecalg::Matrix<K>& m) {
  const auto elems = k.elements();
  const std::size_t n = m.size();
  const std::size_t cols = n ? m[0].size() : 0;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) rows.push_back(i);
    if (rows.size() <= best) continue;
    // enumerate all coefficient vectors over the chosen rows
    std::size_t combos = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) combos *= elems.size();
    bool independent = true;
    for (std::size_t c = 1; c < combos && independent; ++c) {
      std::size_t r = c;
      std::vector<ecalg::Value<K>> sum(cols, k.zero());
      for (std::size_t i : rows) {
        const auto coef = elems[r % elems.size()];
        r /= elems.size();
        for (std::size_t j = 0; j < cols; ++j) sum[j] = k.add(sum[j], k.mul(coef, m[i][j]));
      }
      bool zero = true;
      for (const auto& s : sum) zero = zero && k.is_zero(s);
      if (zero) independent = false;
    }
    if (independent) best = rows.size();
  }
  return best;
}

// Row i of tilde(X) read off from the bilinear expansion of r_i r_j, where
// r_1, r_2 are the rows of X: the coefficients of the product on (e^2, f^2, ef, fe).
template <ecalg::ExactField K>
ecalg::Matrix<K> tilde_by_expansion(const BasisChange<K>& X) {
  const K& k = X.field();
  const AlgebraElement<K> r1{X.x(), X.y()}, r2{X.z(), X.w()};
  auto coeffs = [&](const AlgebraElement<K>& u, const AlgebraElement<K>& v) {
    return std::vector<ecalg::Value<K>>{k.mul(u.alpha, v.alpha), k.mul(u.beta, v.beta), k.mul(u.alpha, v.beta),
                                        k.mul(u.beta, v.alpha)};
  };
  return {coeffs(r1, r1), coeffs(r2, r2), coeffs(r1, r2), coeffs(r2, r1)};
}

// transform(A, X) recomputed by hand: the new basis is the rows of X^-1, each
// product is taken in A and re-expressed in the new basis by Cramer's rule.
template <ecalg::ExactField K>
StructureMatrix<K> transform_by_products(const StructureMatrix<K>& A, const BasisChange<K>& X) {
  const K& k = A.field();
  const auto Y = X.inverse();
  const AlgebraElement<K> n1{Y.x(), Y.y()}, n2{Y.z(), Y.w()};
  const auto D = ecalg::wedge(k, n1, n2);
  auto coords = [&](const AlgebraElement<K>& v) {
    return AlgebraElement<K>{k.div(ecalg::wedge(k, v, n2), D), k.div(ecalg::wedge(k, n1, v), D)};
  };
  return StructureMatrix<K>::from_rows(k, coords(ecalg::multiply(A, n1, n1)), coords(ecalg::multiply(A, n2, n2)),
                                       coords(ecalg::multiply(A, n1, n2)), coords(ecalg::multiply(A, n2, n1)));
}

template <ecalg::ExactField K>
ecalg::Matrix<K> inverse4(const K& k, const ecalg::Matrix<K>& m) {
  ecalg::Matrix<K> aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i)
    for (std::size_t j = 0; j < aug.size(); ++j) aug[i].push_back(i == j ? k.one() : k.zero());
  auto e = ecalg::row_reduce(k, aug);
  ecalg::Matrix<K> out;
  for (auto& row : e.rows) out.emplace_back(row.begin() + static_cast<long>(m.size()), row.end());
  return out;
}

// Orbits of GL2 on a set of tables, as sorted lists of table text forms.
inline std::set<std::set<std::string>> orbits(const std::vector<FAlg>& tables, const std::vector<FX>& group,
                                              std::string (*key)(const FAlg&)) {
  std::set<std::string> seen;
  std::set<std::set<std::string>> out;
  for (const auto& A : tables) {
    if (seen.count(key(A))) continue;
    std::set<std::string> orbit;
    for (const auto& X : group) orbit.insert(key(ecalg::transform(A, X)));
    seen.insert(orbit.begin(), orbit.end());
    out.insert(orbit);
  }
  return out;
}

inline std::string table_key(const FAlg& A) {
  std::string s;
  for (const auto& v : A.entries()) s += std::to_string(v.code) + ",";
  return s;
}

}  // namespace testing
