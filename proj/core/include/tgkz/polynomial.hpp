#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tgkz/cyclotomic.hpp"

namespace tgkz {

using Monomial = std::vector<std::int32_t>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_product(const Monomial& a, const Monomial& b);
/// b / a, assuming divides(a, b).
Monomial monomial_quotient(const Monomial& b, const Monomial& a);
bool coprime(const Monomial& a, const Monomial& b);

/// Term order on N^n. `priority` lists variables from most to least significant.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// Elimination order: graded reverse lex on `first` (in the given order),
  /// ties broken by graded reverse lex on the remaining variables.
  static MonomialOrder block(std::size_t nvars, const std::vector<std::size_t>& first);

  Kind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return priority_.size(); }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t block_size() const noexcept { return block_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder&) const = default;
  std::string name() const;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block)
      : kind_(kind), priority_(std::move(priority)), block_(block) {}
  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const;

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::size_t block_ = 0;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

OrderPtr make_order(MonomialOrder order);
OrderPtr default_order(std::size_t nvars);

struct Term {
  Monomial exponent;
  Cyclotomic coeff;
};

/// Sparse polynomial over a cyclotomic field; terms sorted decreasingly by the
/// attached monomial order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() : Polynomial(0) {}
  explicit Polynomial(std::size_t nvars, OrderPtr order = nullptr);

  static Polynomial constant(std::size_t nvars, const Cyclotomic& c, OrderPtr order = nullptr);
  static Polynomial monomial(const Monomial& exponent, const Cyclotomic& c = Cyclotomic(1), OrderPtr order = nullptr);
  static Polynomial variable(std::size_t nvars, std::size_t index, OrderPtr order = nullptr);
  /// d^u - c * d^v
  static Polynomial binomial(const Monomial& u, const Monomial& v, const Cyclotomic& c = Cyclotomic(1),
                             OrderPtr order = nullptr);
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms, OrderPtr order = nullptr);

  std::size_t nvars() const noexcept { return nvars_; }
  const OrderPtr& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().exponent; }
  const Cyclotomic& leading_coeff() const { return terms_.front().coeff; }
  int total_degree() const;
  /// lcm of coefficient orders.
  std::uint32_t coefficient_order() const;

  Polynomial with_order(OrderPtr order) const;
  Polynomial promote_coefficients(std::uint32_t e) const;
  Polynomial monic() const;
  /// Places variable i at position map[i] in a ring with `nvars` variables.
  Polynomial embed(std::size_t nvars, const std::vector<std::size_t>& map, OrderPtr order = nullptr) const;
  /// Drops trailing variables; all their exponents must be zero.
  Polynomial truncate_variables(std::size_t nvars, OrderPtr order = nullptr) const;
  Cyclotomic coefficient(const Monomial& m) const;
  bool contains_variable(std::size_t index) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Cyclotomic& c) const;
  Polynomial times_term(const Monomial& m, const Cyclotomic& c) const;
  /// this - c * x^m * g, computed in one merge pass.
  Polynomial minus_term_times(const Monomial& m, const Cyclotomic& c, const Polynomial& g) const;

  bool operator==(const Polynomial& rhs) const;

  /// Canonical text, e.g. "d1^2 - zeta(4)*d2" (variables d1..dn).
  std::string to_string(const std::string& var_prefix = "d") const;

 private:
  void check_compatible(const Polynomial& rhs) const;

  std::size_t nvars_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

/// Joins (coefficient, monomial text) pairs as "a - 2*b + zeta(3)*c"; "0" when empty.
std::string format_signed_terms(const std::vector<std::pair<Cyclotomic, std::string>>& terms);

/// Parses the text produced by Polynomial::to_string (any arrangement of
/// rationals, zeta(e)^k, variables <prefix>1..<prefix>n, + - * / ^ and
/// parentheses). Division is allowed by constants only.
Polynomial parse_polynomial(const std::string& text, std::size_t nvars, const std::string& var_prefix = "d",
                            OrderPtr order = nullptr);

/// Parser over several variable prefixes; prefix p, index i maps to variable
/// p * nvars_per_prefix + (i - 1).
Polynomial parse_polynomial_multi(const std::string& text, std::size_t nvars_per_prefix,
                                  const std::vector<std::string>& prefixes, OrderPtr order = nullptr);

}  // namespace tgkz
