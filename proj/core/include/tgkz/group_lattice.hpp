#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgkz/numbers.hpp"

namespace tgkz {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);

  /// Builds from a list of rows; all rows must have `cols` entries.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_list() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> invariant_factors;  // nonzero diagonal entries of D

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
/// Zero rows are dropped; pivots are positive and entries above a pivot lie in
/// [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis (HNF rows) of {u in Z^cols : m * u = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Integer coordinates of `v` in the rows of an HNF basis, or nullopt if `v`
/// is not in the lattice.
std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf_basis, const IntVector& v);

bool lattice_contains(const IntMatrix& hnf_basis, const IntVector& v);

/// Finite abelian group F = Z/l_1 + ... + Z/l_k (l_1 | l_2 | ...) plus Z^d.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::vector<long> torsion_orders, std::size_t free_rank);

  const std::vector<long>& torsion_orders() const noexcept { return torsion_; }
  std::size_t torsion_rank() const noexcept { return torsion_.size(); }
  std::size_t free_rank() const noexcept { return free_rank_; }
  /// |F|
  long torsion_index() const noexcept { return torsion_index_; }
  /// Exponent of F (lcm of orders, the largest order in a chain).
  long exponent() const noexcept { return torsion_.empty() ? 1 : torsion_.back(); }

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::vector<long> torsion_;
  std::size_t free_rank_ = 0;
  long torsion_index_ = 1;
};

/// Element of N = F + Z^d. Torsion coordinates are kept reduced.
struct GroupElement {
  std::vector<long> torsion;
  IntVector free;

  GroupElement() = default;
  GroupElement(std::vector<long> t, IntVector f) : torsion(std::move(t)), free(std::move(f)) {}

  static GroupElement zero(const AbelianGroup& g);
  /// Reduces torsion coordinates into range; throws on shape mismatch.
  static GroupElement make(const AbelianGroup& g, std::vector<long> torsion, IntVector free);

  bool is_torsion() const;

  auto operator<=>(const GroupElement& rhs) const {
    if (auto c = torsion <=> rhs.torsion; c != 0) return c;
    return free_compare(rhs);
  }
  bool operator==(const GroupElement& rhs) const = default;

  std::string to_string() const;

 private:
  std::strong_ordering free_compare(const GroupElement& rhs) const;
};

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement subtract(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const AbelianGroup& g, const GroupElement& a);
GroupElement scale(const AbelianGroup& g, const GroupElement& a, long k);
bool belongs_to(const AbelianGroup& g, const GroupElement& a);

/// Element of N^v = Hom(N, Z) (tensored with Q); torsion is annihilated.
struct Functional {
  RationalVector free_part;

  Rational operator()(std::span<const Integer> v) const;
  Rational operator()(const GroupElement& u) const { return (*this)(u.free); }
  bool operator==(const Functional&) const = default;
  std::string to_string() const;
};

/// Basis of {u in Z^n : sum u_j a_j = 0 in N}.
IntMatrix kernel_lattice(std::span<const GroupElement> columns, const AbelianGroup& group);

/// Basis of ker_Z(A) for a d x n integer matrix.
IntMatrix kernel_lattice_free(const IntMatrix& a);

/// [N : Z{columns}], or nullopt for infinite index.
std::optional<Integer> lattice_index(std::span<const GroupElement> columns, const AbelianGroup& group);

}  // namespace tgkz
