#pragma once

#include <cstddef>
#include <vector>

#include "tgkz/polyhedral.hpp"

namespace tgkz {

enum class ModuleKind { K, KInterior, Explicit };

const char* module_kind_name(ModuleKind kind);

/// K, its interior part, or the module generated by explicit elements over NA.
class SemigroupModule {
 public:
  static SemigroupModule full(PointConfig config);
  static SemigroupModule interior(PointConfig config);
  /// Every generator must lie in K.
  static SemigroupModule generated(PointConfig config, std::vector<GroupElement> generators);

  ModuleKind kind() const noexcept { return kind_; }
  const PointConfig& config() const noexcept { return config_; }
  const std::vector<GroupElement>& explicit_generators() const noexcept { return generators_; }

  const std::vector<IntVector>& facet_normals() const noexcept { return facets_; }
  bool pointed() const noexcept { return pointed_; }
  /// Strictly positive functional on nonunit columns; throws NOT_POINTED if none exists.
  const IntVector& grading() const;
  const std::vector<GroupElement>& unit_group() const noexcept { return units_; }

 private:
  SemigroupModule(ModuleKind kind, PointConfig config, std::vector<GroupElement> gens);

  ModuleKind kind_;
  PointConfig config_;
  std::vector<GroupElement> generators_;
  std::vector<IntVector> facets_;
  bool pointed_ = false;
  IntVector h_;
  std::vector<GroupElement> units_;
};

struct PrimitiveSet {
  std::vector<GroupElement> elements;
  std::vector<IntVector> degrees;  // free parts, aligned with elements
};

/// Subgroup generated by the columns with zero free part, sorted.
std::vector<GroupElement> units(const PointConfig& config);

/// Indices of columns with nonzero free part.
std::vector<std::size_t> nonunit_columns(const PointConfig& config);

Integer h_degree(const IntVector& h, const GroupElement& t);

/// t in NA: bounded search over nonunit columns, remainder tested against the units.
bool in_semigroup(const GroupElement& t, const PointConfig& config);

bool membership(const GroupElement& t, const SemigroupModule& module);

/// No nonunit column a_j with t - a_j in the module.
bool is_primitive(const GroupElement& t, const SemigroupModule& module);

/// T_prim for K or K°. With `paranoid`, a doubled candidate box is scanned and
/// any primitive outside the primary candidates raises INTERNAL_CHECK_FAILED.
PrimitiveSet module_generators(const SemigroupModule& module, bool paranoid = true);

/// T_prim of an explicitly generated module.
PrimitiveSet primitive_elements(const SemigroupModule& module);

/// T_prim for any module kind.
PrimitiveSet primitive_set(const SemigroupModule& module, bool paranoid = true);

/// All module elements t with h(t) <= bound, sorted by (h, t).
std::vector<GroupElement> module_slice(const SemigroupModule& module, const Integer& bound);

}  // namespace tgkz
