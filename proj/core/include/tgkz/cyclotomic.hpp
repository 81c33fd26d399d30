#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tgkz/numbers.hpp"

namespace tgkz {

/// Q(zeta_e) presented as Q[x] / Phi_e(x). Instances are shared and immutable.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::uint32_t order);

  std::uint32_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }
  /// Coefficients of Phi_e, constant term first; monic.
  const std::vector<Integer>& minimal_polynomial() const noexcept { return phi_; }
  /// x^m mod Phi_e for 0 <= m < e.
  const RationalVector& power(std::uint64_t m) const { return powers_[m % order_]; }

 private:
  explicit CyclotomicField(std::uint32_t order);

  std::uint32_t order_;
  std::size_t degree_;
  std::vector<Integer> phi_;
  std::vector<RationalVector> powers_;
};

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(std::uint32_t e);

/// Exact element of a cyclotomic field. Binary operations between elements of
/// Q(zeta_e) and Q(zeta_f) take place in Q(zeta_lcm(e,f)).
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long q) : Cyclotomic(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(std::shared_ptr<const CyclotomicField> field, RationalVector coeffs);

  /// zeta_e^power
  static Cyclotomic root_of_unity(std::uint32_t e, long power);
  static Cyclotomic zero(std::uint32_t e);

  std::uint32_t order() const noexcept { return field_->order(); }
  const CyclotomicField& field() const noexcept { return *field_; }
  const RationalVector& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Valid only when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Same element viewed in Q(zeta_e) for a multiple e of order().
  Cyclotomic promote(std::uint32_t e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  Cyclotomic inverse() const;
  Cyclotomic pow(long k) const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Canonical text: "3/2", "zeta(4)", "(1 - 2*zeta(8)^3)".
  std::string to_string() const;
  bool needs_parentheses() const;

 private:
  std::shared_ptr<const CyclotomicField> field_;
  RationalVector coeffs_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

/// Parses the canonical text (and any expression built from rationals,
/// zeta(e)^k, +, -, *, parentheses).
Cyclotomic parse_cyclotomic(const std::string& text);

}  // namespace tgkz
