#pragma once

// Exact Gaussian elimination over an ExactField. No pivoting heuristics are
// needed: any nonzero pivot is exact.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ecalg/field.hpp"

namespace ecalg {

template <ExactField K>
using Matrix = std::vector<std::vector<Value<K>>>;

template <ExactField K>
struct RowEchelon {
  Matrix<K> rows;                  // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
  bool negated = false;            // odd number of row swaps
  Value<K> pivot_product;          // product of pivots before normalization
};

template <ExactField K>
std::size_t column_count(const Matrix<K>& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix rows");
  }
  return cols;
}

template <ExactField K>
RowEchelon<K> row_reduce(const K& k, Matrix<K> m) {
  const std::size_t cols = column_count<K>(m);
  RowEchelon<K> out{{}, {}, false, k.one()};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && k.is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      out.negated = !out.negated;
    }
    out.pivot_product = k.mul(out.pivot_product, m[r][c]);
    const Value<K> scale = k.inv(m[r][c]);
    for (auto& v : m[r]) v = k.mul(v, scale);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || k.is_zero(m[i][c])) continue;
      const Value<K> f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <ExactField K>
std::size_t matrix_rank(const K& k, Matrix<K> m) {
  return row_reduce(k, std::move(m)).pivots.size();
}

template <ExactField K>
Value<K> determinant(const K& k, Matrix<K> m) {
  const std::size_t n = m.size();
  if (column_count<K>(m) != n) throw std::invalid_argument("determinant of a non-square matrix");
  auto e = row_reduce(k, std::move(m));
  if (e.pivots.size() < n) return k.zero();
  return e.negated ? k.neg(e.pivot_product) : e.pivot_product;
}

template <ExactField K>
Matrix<K> matrix_product(const K& k, const Matrix<K>& a, const Matrix<K>& b) {
  const std::size_t inner = column_count<K>(a);
  const std::size_t cols = column_count<K>(b);
  if (inner != b.size()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix<K> out(a.size(), std::vector<Value<K>>(cols, k.zero()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Value<K> s = k.zero();
      for (std::size_t t = 0; t < inner; ++t) s = k.add(s, k.mul(a[i][t], b[t][j]));
      out[i][j] = s;
    }
  }
  return out;
}

template <ExactField K>
Matrix<K> identity_matrix(const K& k, std::size_t n) {
  Matrix<K> out(n, std::vector<Value<K>>(n, k.zero()));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = k.one();
  return out;
}

enum class SolutionKind { unique, none, family };

template <ExactField K>
struct LinearSolution {
  SolutionKind kind = SolutionKind::none;
  std::vector<Value<K>> particular;           // empty when kind == none
  std::vector<std::vector<Value<K>>> kernel;  // basis of the homogeneous solutions

  std::size_t dimension() const noexcept { return kernel.size(); }
};

/// Classifies the solutions of coefficients * v = rhs.
template <ExactField K>
LinearSolution<K> solve_linear(const K& k, const Matrix<K>& coefficients, const std::vector<Value<K>>& rhs) {
  const std::size_t cols = column_count<K>(coefficients);
  if (coefficients.size() != rhs.size()) throw std::invalid_argument("rhs length does not match row count");
  Matrix<K> aug = coefficients;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  auto e = row_reduce(k, std::move(aug));

  LinearSolution<K> out;
  if (!e.pivots.empty() && e.pivots.back() == cols) return out;  // 0 = nonzero row

  out.particular.assign(cols, k.zero());
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    out.particular[e.pivots[r]] = e.rows[r][cols];
    is_pivot[e.pivots[r]] = true;
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Value<K>> v(cols, k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = k.neg(e.rows[r][free]);
    out.kernel.push_back(std::move(v));
  }
  out.kind = out.kernel.empty() ? SolutionKind::unique : SolutionKind::family;
  return out;
}

// Boundary overloads over self-describing elements. These validate shape and
// field membership, then dispatch to the typed routines above.

using ElementMatrix = std::vector<std::vector<FieldElement>>;

struct ElementSolution {
  SolutionKind kind = SolutionKind::none;
  std::vector<FieldElement> particular;
  std::vector<std::vector<FieldElement>> kernel;
};

std::size_t matrix_rank(const ElementMatrix& rows);
ElementSolution solve_linear(const ElementMatrix& coefficients, const std::vector<FieldElement>& rhs);

}  // namespace ecalg
