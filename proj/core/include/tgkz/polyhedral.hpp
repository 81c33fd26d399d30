#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgkz/cyclotomic.hpp"
#include "tgkz/group_lattice.hpp"

namespace tgkz {

/// The multi-set of generators a_1..a_n in N, with A the d x n matrix of free parts.
class PointConfig {
 public:
  PointConfig(AbelianGroup group, std::vector<GroupElement> columns);

  const AbelianGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& columns() const noexcept { return columns_; }
  const GroupElement& column(std::size_t j) const { return columns_.at(j); }
  const IntMatrix& A() const noexcept { return a_; }
  std::size_t n() const noexcept { return columns_.size(); }
  std::size_t d() const noexcept { return group_.free_rank(); }
  long ell() const noexcept { return group_.torsion_index(); }
  /// [N : Z A], nullopt when infinite.
  const std::optional<Integer>& delta() const noexcept { return delta_; }

  const IntVector& free_column(std::size_t j) const { return columns_.at(j).free; }
  bool is_zero_column(std::size_t j) const;

 private:
  AbelianGroup group_;
  std::vector<GroupElement> columns_;
  IntMatrix a_;
  std::optional<Integer> delta_;
};

struct Face {
  std::vector<std::size_t> column_indices;
  std::vector<Functional> normal_functionals;
  std::size_t dim = 0;

  bool operator==(const Face&) const = default;
};

/// shift + Q-span of the listed columns.
struct AffineSubspace {
  RationalVector shift;
  std::vector<std::size_t> columns;

  bool operator==(const AffineSubspace&) const = default;
};

struct Arrangement {
  std::vector<AffineSubspace> pieces;
};

/// Primitive inner facet normals, lexicographically sorted.
std::vector<Functional> facets(const PointConfig& config);
/// Integer form of facets().
std::vector<IntVector> facet_normals(const PointConfig& config);

bool is_pointed(const PointConfig& config);

/// Integer functional strictly positive on every nonzero free column.
IntVector positive_functional(const PointConfig& config);

std::vector<Face> face_lattice(const PointConfig& config);

/// Placing triangulation of a point list; each simplex lists d + 1 indices.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& points, std::size_t dim);

/// Maximal simplicial cones of the cone, each given by d generating free vectors.
std::vector<std::vector<IntVector>> simplicial_cones(const PointConfig& config);

/// Normalized volume of conv({0} + free columns); unit simplex = 1.
Integer normalized_volume(const PointConfig& config);

IntVector epsilon_A(const PointConfig& config);

/// h with h(a_j) = 1 for all j, or nullopt.
std::optional<Functional> homogenizing_functional(const PointConfig& config);

/// True iff beta lies on some piece; beta has d cyclotomic entries.
bool membership_in_arrangement(const std::vector<Cyclotomic>& beta, const Arrangement& arr, const PointConfig& config);

struct HypothesisReport {
  bool spans = false;
  bool pointed = false;
  bool delta_divides_ell = false;
  std::optional<Integer> delta;
  long ell = 1;

  bool all() const noexcept { return spans && pointed && delta_divides_ell; }
};

HypothesisReport check_hypotheses(const PointConfig& config);

std::string to_string(const IntVector& v);

}  // namespace tgkz
