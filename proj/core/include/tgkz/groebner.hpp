#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tgkz/polynomial.hpp"

namespace tgkz {

struct IdealBasis {
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;
  OrderPtr order;
  bool is_groebner = false;

  bool is_zero_ideal() const { return generators.empty(); }
  bool is_unit_ideal() const;
  /// Generators joined with ", ", "(0)" for the zero ideal.
  std::string to_string(const std::string& var_prefix = "d") const;
};

/// Default 5000; TGKZ_PAIR_BUDGET overrides.
std::size_t default_pair_budget();

/// Reduced Groebner basis: monic, sorted by increasing leading monomial.
/// Throws BudgetExceeded after `budget` S-pairs.
IdealBasis buchberger(const std::vector<Polynomial>& gens, std::size_t nvars, OrderPtr order = nullptr,
                      std::optional<std::size_t> budget = std::nullopt);

/// Buchberger completion fed one polynomial at a time; after each add() the
/// basis is a Groebner basis of everything added so far.
class GroebnerBuilder {
 public:
  GroebnerBuilder(std::size_t nvars, OrderPtr order = nullptr, std::optional<std::size_t> budget = std::nullopt);

  void add(const Polynomial& f);
  /// Some leading monomial of the current basis divides m.
  bool reducible(const Monomial& m) const;
  const OrderPtr& order() const noexcept { return order_; }
  /// Reduced basis of everything added so far.
  IdealBasis result() const;

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  void complete();
  void insert(Polynomial h);
  bool pending(std::size_t a, std::size_t b) const;
  bool chain_criterion(const Pair& p) const;

  std::size_t nvars_;
  OrderPtr order_;
  std::size_t budget_;
  std::size_t processed_ = 0;
  std::uint32_t field_ = 1;
  std::vector<Polynomial> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> done_;
};

IdealBasis groebner(const IdealBasis& ideal, std::optional<std::size_t> budget = std::nullopt);

/// Fully reduced remainder of f modulo `basis` (division algorithm).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// I : (prod vars)^inf, by adjoining w with w * prod(vars) - 1 and eliminating w.
IdealBasis saturate_wrt_variables(const IdealBasis& ideal, const std::vector<std::size_t>& vars);
IdealBasis saturate_all_variables(const IdealBasis& ideal);

/// Elimination of t from t*I + (1 - t)*J.
IdealBasis ideal_intersect(const IdealBasis& i, const IdealBasis& j);
IdealBasis ideal_intersect(const std::vector<IdealBasis>& ideals);

bool ideal_member(const Polynomial& f, const IdealBasis& ideal);
bool ideal_contains(const IdealBasis& big, const IdealBasis& small);
bool ideal_equal(const IdealBasis& i, const IdealBasis& j);

/// True iff every S-pair of the generators reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& gens);

}  // namespace tgkz
