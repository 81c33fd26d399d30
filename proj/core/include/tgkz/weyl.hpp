#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tgkz/group_lattice.hpp"
#include "tgkz/polynomial.hpp"

namespace tgkz {

/// Normally ordered monomial x^a d^b.
struct WeylMonomial {
  Monomial x;
  Monomial d;

  auto operator<=>(const WeylMonomial&) const = default;
};

/// Element of the Weyl algebra in n variables, all x to the left of all d.
class WeylElement {
 public:
  explicit WeylElement(std::size_t nvars = 0) : nvars_(nvars) {}

  static WeylElement constant(std::size_t nvars, const Cyclotomic& c);
  static WeylElement x(std::size_t nvars, std::size_t i);
  static WeylElement d(std::size_t nvars, std::size_t i);
  static WeylElement term(const Monomial& x, const Monomial& d, const Cyclotomic& c = Cyclotomic(1));
  /// Polynomial in the d variables only.
  static WeylElement from_polynomial(const Polynomial& f);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<WeylMonomial, Cyclotomic>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// max |a| + |b|; -1 for zero.
  int total_degree() const;
  /// A(b - a) of a monomial x^a d^b.
  static IntVector a_degree(const WeylMonomial& m, const IntMatrix& a);

  WeylElement& operator+=(const WeylElement& rhs);
  WeylElement& operator-=(const WeylElement& rhs);
  WeylElement operator-() const;
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement scaled(const Cyclotomic& c) const;
  bool operator==(const WeylElement& rhs) const;

  /// x -> -x, d -> -d.
  WeylElement sign_twisted() const;

  /// Terms by decreasing total degree, e.g. "x1*d1 + 2*x2*d2 - 1/2".
  std::string to_string() const;

 private:
  void add_term(const WeylMonomial& m, const Cyclotomic& c);

  std::size_t nvars_;
  std::map<WeylMonomial, Cyclotomic> terms_;
};

/// The d Euler operators sum_j a_ij x_j d_j.
std::vector<WeylElement> euler_operators(const IntMatrix& a);

/// E_mu = sum_j mu(a_j) x_j d_j.
WeylElement euler_operator(const IntMatrix& a, const RationalVector& mu);

}  // namespace tgkz
