#pragma once

#include <string>
#include <variant>

#include "tgkz/error.hpp"
#include <vector>

#include "tgkz/groebner.hpp"
#include "tgkz/polyhedral.hpp"

namespace tgkz {

/// Character on a sublattice L of Z^n, stored by its values on an HNF basis of L.
class PartialCharacter {
 public:
  PartialCharacter() = default;
  /// `rows` must be linearly independent; values are transported to the HNF basis.
  PartialCharacter(const IntMatrix& rows, std::vector<Cyclotomic> values);
  static PartialCharacter trivial(const IntMatrix& rows);

  const IntMatrix& basis() const noexcept { return basis_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  /// Z^n / L torsion-free.
  bool saturated() const;
  bool is_trivial() const;
  /// rho(m); throws LATTICE_MISMATCH if m is not in L.
  Cyclotomic evaluate(const IntVector& m) const;

  std::string to_string() const;

 private:
  IntMatrix basis_;
  std::vector<Cyclotomic> values_;
};

/// Character on all of Z^n, given by its values on the unit vectors.
struct FullCharacter {
  std::vector<Cyclotomic> on_unit_vectors;

  Cyclotomic evaluate(const IntVector& m) const;
};

/// Binomials d^{m+} - rho(m) d^{m-} for the basis rows, saturated by all variables.
IdealBasis lattice_ideal(const PartialCharacter& rho);

IdealBasis toric_ideal_IA(const PointConfig& config);
IdealBasis toric_ideal_IcalA(const PointConfig& config);

/// Exponent differences of the reduced Groebner basis of I_A.
std::vector<IntVector> markov_basis(const PointConfig& config);

/// Ideal generated by d^{l m+} - d^{l m-} over the Markov basis.
IdealBasis power_ideal(const PointConfig& config);

/// I_{A,rho}; rho must live on ker A.
IdealBasis twisted_ideal(const PointConfig& config, const PartialCharacter& rho);

/// Restriction of rho (on ker A) to the kernel of the face columns, embedded in Z^n.
PartialCharacter restrict_to_face(const PointConfig& config, const Face& face, const PartialCharacter& rho);

/// I^tau_{A,rho} from a character already living on the face kernel.
IdealBasis face_ideal_from_face_character(const PointConfig& config, const Face& face, const PartialCharacter& face_rho);

/// I^tau_{A,rho} for rho on ker A.
IdealBasis face_twisted_ideal(const PointConfig& config, const Face& face, const PartialCharacter& rho);

/// Extension that is trivial on a unimodular complement; requires a saturated lattice.
FullCharacter extend_character(const PartialCharacter& rho);

/// d^u -> rho(u) d^u.
Polynomial twist_automorphism(const Polynomial& f, const FullCharacter& rho);
IdealBasis twist_automorphism(const IdealBasis& ideal, const FullCharacter& rho);

struct MinimalPrime {
  PartialCharacter rho;
  IdealBasis ideal;
};

/// The primes I_{A,rho_k}, one per character of ker A / ker(cal A).
std::vector<MinimalPrime> minimal_primes_IcalA(const PointConfig& config, unsigned threads = 1);

/// Groebner check that the primes intersect to I_cal A.
bool verify_prime_intersection(const PointConfig& config, const std::vector<MinimalPrime>& primes);

struct ClassifiedPrime {
  Face face;
  PartialCharacter rho;  // on the face kernel
};

struct NotOfForm {
  ErrorCode reason;
  std::string detail;
};

using Classification = std::variant<ClassifiedPrime, NotOfForm>;

bool is_A_graded(const Polynomial& f, const PointConfig& config);

/// Recognizes I = I^tau_{A,rho}; ungraded input yields NotOfForm with reason NOT_GRADED.
Classification classify_graded_binomial_prime(const IdealBasis& ideal, const PointConfig& config);

}  // namespace tgkz
