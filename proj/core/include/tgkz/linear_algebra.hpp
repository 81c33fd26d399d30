#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tgkz/cyclotomic.hpp"
#include "tgkz/numbers.hpp"

namespace tgkz {

/// Dense matrix over an exact field (Rational or Cyclotomic), list of rows.
template <class F>
using FieldMatrix = std::vector<std::vector<F>>;

template <class F>
struct RowEchelon {
  FieldMatrix<F> reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class F>
RowEchelon<F> rref(FieldMatrix<F> m) {
  RowEchelon<F> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  m.resize(r);
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const FieldMatrix<F>& m) {
  return rref(m).rank();
}

template <class F>
F determinant(FieldMatrix<F> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    F inv = F(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      F f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

/// One solution of m * x = b with every free variable set to zero, or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const FieldMatrix<F>& m, const std::vector<F>& b) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  FieldMatrix<F> aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto e = rref(std::move(aug));
  std::vector<F> x(cols, F(0));
  for (std::size_t i = 0; i < e.rank(); ++i) {
    std::size_t c = e.pivot_columns[i];
    if (c == cols) return std::nullopt;
    x[c] = e.reduced[i][cols];
  }
  return x;
}

/// Converts an integer matrix given by rows into a rational one.
inline FieldMatrix<Rational> to_rational(const std::vector<IntVector>& rows) {
  FieldMatrix<Rational> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace tgkz
