#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tgkz/hypergeometric.hpp"
#include "tgkz/linear_algebra.hpp"

namespace tgkz {

/// ell * vol(A u {0}) for K or K°; throws HYPOTHESIS_FAILURE when the hypotheses fail.
Integer rank_formula(const PointConfig& config, ModuleKind kind);

/// -beta - epsilon_A
std::vector<Cyclotomic> dual_parameter(const std::vector<Cyclotomic>& beta, const PointConfig& config);

WeylElement sign_twist(const WeylElement& p);
SystemPresentation sign_twist(const SystemPresentation& sys);

struct DualityReport {
  std::vector<Cyclotomic> beta;
  IntVector epsilon;
  std::vector<Cyclotomic> dual_parameter;
  Integer rank_primal;
  Integer rank_dual;
  bool twisted = true;
};

struct DualSystem {
  SystemPresentation system;
  DualityReport report;
};

/// Sign-twisted primitive presentation of K° at -beta - epsilon_A.
DualSystem dual_system(const PointConfig& config, const std::vector<Cyclotomic>& beta,
                       std::optional<std::size_t> bound = std::nullopt);

struct SplitPiece {
  IntVector degree;
  FieldMatrix<Cyclotomic> matrix;  // rows: characters, columns: torsion elements
  Cyclotomic determinant;
};

struct CharacterSplit {
  std::vector<std::vector<long>> characters;  // tuples r, y_i -> zeta_{l_i}^{r_i}
  std::vector<std::vector<long>> torsion;     // column labels
  std::vector<SplitPiece> pieces;             // graded pieces with h <= truncation
  std::size_t truncation = 10;
  bool certified = false;
};

CharacterSplit character_split(const PointConfig& config, std::size_t truncation = 10, unsigned threads = 1);

}  // namespace tgkz
