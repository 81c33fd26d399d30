#include "tgkz/group_lattice.hpp"

#include <algorithm>
#include <sstream>

#include "tgkz/error.hpp"

namespace tgkz {

namespace {

constexpr const char* kModule = "group_lattice";

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorCode::DimensionMismatch, kModule, "entry count differs from rows x cols");
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, kModule, "ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> r;
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    IntVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return from_rows(r, cols);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> r;
  r.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, kModule, "matrix product shape mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
    }
  return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, kModule, "matrix-vector shape mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, kModule, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto move_min_pivot = [&](std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        if (!found || abs(d(i, j)) < abs(d(bi, bj))) {
          found = true;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    d.swap_rows(t, bi);
    u.swap_rows(t, bi);
    d.swap_cols(t, bj);
    v.swap_cols(t, bj);
    return true;
  };

  std::vector<Integer> factors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (!move_min_pivot(t)) break;
    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = trunc_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = trunc_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) residue = true;
      }
      if (residue) {
        move_min_pivot(t);
        continue;
      }
      // Row and column are clear; enforce divisibility on the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mod_floor(d(i, j), abs(d(t, t))) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    factors.push_back(d(t, t));
  }
  return SmithDecomposition{std::move(u), std::move(d), std::move(v), std::move(factors)};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && h(p, c) == 0) ++p;
    if (p == rows) continue;
    h.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      while (h(i, c) != 0) {
        Integer q = trunc_div(h(r, c), h(i, c));
        h.add_row_multiple(r, i, -q);
        h.swap_rows(r, i);
      }
    }
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer q = floor_div(h(k, c), h(r, c));
      h.add_row_multiple(k, r, -q);
    }
    ++r;
  }
  std::vector<Integer> data(h.cols() * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) data[i * cols + j] = h(i, j);
  return IntMatrix(r, cols, std::move(data));
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  const std::size_t n = m.cols();
  IntMatrix basis(n - r, n);
  for (std::size_t k = r; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) basis(k - r, i) = snf.V(i, k);
  return hermite_normal_form(basis);
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf_basis, const IntVector& v) {
  if (v.size() != hnf_basis.cols())
    throw Error(ErrorCode::DimensionMismatch, kModule, "vector length differs from lattice ambient rank");
  IntVector rem = v;
  IntVector coords(hnf_basis.rows());
  for (std::size_t i = 0; i < hnf_basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < hnf_basis.cols() && hnf_basis(i, p) == 0) ++p;
    if (p == hnf_basis.cols()) continue;
    if (mod_floor(rem[p], abs(hnf_basis(i, p))) != 0) return std::nullopt;
    Integer c = rem[p] / hnf_basis(i, p);
    coords[i] = c;
    for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= c * hnf_basis(i, j);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

bool lattice_contains(const IntMatrix& hnf_basis, const IntVector& v) {
  return lattice_coordinates(hnf_basis, v).has_value();
}

AbelianGroup::AbelianGroup(std::vector<long> torsion_orders, std::size_t free_rank)
    : torsion_(std::move(torsion_orders)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw Error(ErrorCode::Malformed, kModule, "torsion orders must be at least 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw Error(ErrorCode::Malformed, kModule, "torsion orders must form a divisibility chain");
    torsion_index_ *= torsion_[i];
  }
}

GroupElement GroupElement::zero(const AbelianGroup& g) {
  return GroupElement(std::vector<long>(g.torsion_rank(), 0), IntVector(g.free_rank()));
}

GroupElement GroupElement::make(const AbelianGroup& g, std::vector<long> torsion, IntVector free) {
  if (torsion.size() != g.torsion_rank() || free.size() != g.free_rank())
    throw Error(ErrorCode::DimensionMismatch, kModule, "group element shape does not match the group");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    long l = g.torsion_orders()[i];
    torsion[i] = ((torsion[i] % l) + l) % l;
  }
  return GroupElement(std::move(torsion), std::move(free));
}

bool GroupElement::is_torsion() const {
  return std::all_of(free.begin(), free.end(), [](const Integer& x) { return x == 0; });
}

std::strong_ordering GroupElement::free_compare(const GroupElement& rhs) const {
  const std::size_t n = std::min(free.size(), rhs.free.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(free[i], rhs.free[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return free.size() <=> rhs.free.size();
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i] << '~';
  if (!torsion.empty()) os << "; ";
  for (std::size_t i = 0; i < free.size(); ++i) os << (i ? "," : "") << free[i].get_str();
  os << ')';
  return os.str();
}

bool belongs_to(const AbelianGroup& g, const GroupElement& a) {
  if (a.torsion.size() != g.torsion_rank() || a.free.size() != g.free_rank()) return false;
  for (std::size_t i = 0; i < a.torsion.size(); ++i)
    if (a.torsion[i] < 0 || a.torsion[i] >= g.torsion_orders()[i]) return false;
  return true;
}

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  GroupElement r = a;
  for (std::size_t i = 0; i < r.torsion.size(); ++i)
    r.torsion[i] = (r.torsion[i] + b.torsion[i]) % g.torsion_orders()[i];
  for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += b.free[i];
  return r;
}

GroupElement negate(const AbelianGroup& g, const GroupElement& a) {
  GroupElement r = a;
  for (std::size_t i = 0; i < r.torsion.size(); ++i) {
    long l = g.torsion_orders()[i];
    r.torsion[i] = (l - r.torsion[i]) % l;
  }
  for (auto& x : r.free) x = -x;
  return r;
}

GroupElement subtract(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  return add(g, a, negate(g, b));
}

GroupElement scale(const AbelianGroup& g, const GroupElement& a, long k) {
  GroupElement r = a;
  for (std::size_t i = 0; i < r.torsion.size(); ++i) {
    long l = g.torsion_orders()[i];
    r.torsion[i] = (((r.torsion[i] * (k % l)) % l) + l) % l;
  }
  for (auto& x : r.free) x *= k;
  return r;
}

Rational Functional::operator()(std::span<const Integer> v) const {
  if (v.size() != free_part.size())
    throw Error(ErrorCode::DimensionMismatch, kModule, "functional applied to vector of wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += free_part[i] * v[i];
  return s;
}

std::string Functional::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < free_part.size(); ++i) s += (i ? "," : "") + tgkz::to_string(free_part[i]);
  return s + ")";
}

namespace {

// Columns a_j followed by the relations l_i e_i, as a (k + d) x (n + k) matrix
// presenting N = Z^{k+d} / (l_i e_i).
IntMatrix presentation_matrix(std::span<const GroupElement> columns, const AbelianGroup& group) {
  const std::size_t k = group.torsion_rank();
  const std::size_t d = group.free_rank();
  const std::size_t n = columns.size();
  IntMatrix p(k + d, n + k);
  for (std::size_t j = 0; j < n; ++j) {
    if (!belongs_to(group, columns[j]))
      throw Error(ErrorCode::DimensionMismatch, kModule, "column " + std::to_string(j + 1) + " is not in the group");
    for (std::size_t i = 0; i < k; ++i) p(i, j) = columns[j].torsion[i];
    for (std::size_t i = 0; i < d; ++i) p(k + i, j) = columns[j].free[i];
  }
  for (std::size_t i = 0; i < k; ++i) p(i, n + i) = group.torsion_orders()[i];
  return p;
}

}  // namespace

IntMatrix kernel_lattice(std::span<const GroupElement> columns, const AbelianGroup& group) {
  const std::size_t n = columns.size();
  const IntMatrix p = presentation_matrix(columns, group);
  const IntMatrix full = integer_kernel(p);
  IntMatrix projected(full.rows(), n);
  for (std::size_t i = 0; i < full.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) projected(i, j) = full(i, j);
  return hermite_normal_form(projected);
}

IntMatrix kernel_lattice_free(const IntMatrix& a) { return integer_kernel(a); }

std::optional<Integer> lattice_index(std::span<const GroupElement> columns, const AbelianGroup& group) {
  const IntMatrix p = presentation_matrix(columns, group);
  const auto snf = smith_normal_form(p);
  if (snf.rank() < p.rows()) return std::nullopt;
  Integer index = 1;
  for (const auto& f : snf.invariant_factors) index *= f;
  return index;
}

}  // namespace tgkz
