#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgkz/binomial_ideals.hpp"
#include "tgkz/semigroup_modules.hpp"
#include "tgkz/weyl.hpp"

namespace tgkz {

enum class RelationKind { Binomial, Euler, Ideal };

const char* relation_kind_name(RelationKind kind);

struct RelationTerm {
  std::size_t generator;
  WeylElement op;
};

/// sum_g P_g 1_g = 0
struct Relation {
  RelationKind kind;
  std::vector<RelationTerm> terms;

  std::string to_string() const;
};

struct SystemPresentation {
  PointConfig config;
  std::optional<ModuleKind> module_kind;  // nullopt for face modules
  std::vector<Cyclotomic> beta;
  std::vector<GroupElement> generators;
  std::vector<Relation> relations;
  std::size_t bound = 0;
  bool stabilized = true;

  std::size_t count(RelationKind kind) const;
};

/// (E_i - (beta - u)_i) 1_u for the generator at `index`.
std::vector<Relation> euler_relations(const PointConfig& config, const std::vector<Cyclotomic>& beta,
                                      const GroupElement& u, std::size_t index);

/// Slice of the full relation family: generators t with h(t) <= h_bound.
SystemPresentation bbgkz_relations(const SemigroupModule& module, const std::vector<Cyclotomic>& beta,
                                   const Integer& h_bound);

/// 2 + 2 * ell * (largest total degree of a Markov move side).
std::size_t default_binomial_bound(const PointConfig& config);

/// Minimal binomial gluing relations among T_prim with |u|, |v| <= bound.
std::vector<Relation> primitive_binomial_relations(const SemigroupModule& module,
                                                   const std::vector<GroupElement>& prim, std::size_t bound);

/// Presentation on T_prim; the binomial part is recomputed at bound + 2 to set `stabilized`.
SystemPresentation bbgkz_primitive_presentation(const SemigroupModule& module, const std::vector<Cyclotomic>& beta,
                                                std::optional<std::size_t> bound = std::nullopt);

/// D / D(I^tau_{A,rho}, E - beta) on a single generator.
SystemPresentation h0_face_presentation(const PointConfig& config, const Face& face, const PartialCharacter& rho,
                                        const std::vector<Cyclotomic>& beta);

struct ModuleSpec {
  enum class Kind { K, KInterior, KModKInterior, Face };

  Kind kind = Kind::K;
  Face face;
  RationalVector shift;

  static ModuleSpec full() { return {}; }
  static ModuleSpec interior() { return {Kind::KInterior, {}, {}}; }
  static ModuleSpec boundary() { return {Kind::KModKInterior, {}, {}}; }
  static ModuleSpec face_module(Face f, RationalVector shift) { return {Kind::Face, std::move(f), std::move(shift)}; }
};

/// Zariski closure of the graded degrees, as a union of shifted column spans.
Arrangement quasi_degrees(const ModuleSpec& spec, const PointConfig& config);

enum class Vanishing { Vanishes, Nonvanishing };

const char* vanishing_name(Vanishing v);

Vanishing vanishing_test(const ModuleSpec& spec, const PointConfig& config, const std::vector<Cyclotomic>& beta);

/// Homogenizing functional, if one exists.
std::optional<Functional> regularity_certificate(const PointConfig& config);

}  // namespace tgkz
