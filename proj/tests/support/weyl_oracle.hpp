#pragma once

#include <map>
#include <vector>

#include "tgkz/linear_algebra.hpp"
#include "tgkz/weyl.hpp"

namespace tgkz::testing {

inline void weyl_monomials(std::size_t n, int bound, std::vector<WeylMonomial>& out) {
  std::vector<std::int32_t> e(2 * n, 0);
  auto rec = [&](auto&& self, std::size_t pos, int used) -> void {
    if (pos == 2 * n) {
      out.push_back(WeylMonomial{Monomial(e.begin(), e.begin() + n), Monomial(e.begin() + n, e.end())});
      return;
    }
    for (int k = 0; k + used <= bound; ++k) {
      e[pos] = k;
      self(self, pos + 1, used + k);
    }
    e[pos] = 0;
  };
  rec(rec, 0, 0);
}

/// Is 1 = sum_k P_k g_k with every P_k of total degree <= bound?  Rational coefficients only.
inline bool one_in_left_ideal(const std::vector<WeylElement>& gens, int bound) {
  if (gens.empty()) return false;
  const std::size_t n = gens.front().nvars();
  std::vector<WeylMonomial> multipliers;
  weyl_monomials(n, bound, multipliers);
  std::vector<WeylElement> columns;
  for (const auto& g : gens)
    for (const auto& m : multipliers) columns.push_back(WeylElement::term(m.x, m.d) * g);
  std::map<WeylMonomial, std::size_t> row_of;
  for (const auto& c : columns)
    for (const auto& [m, v] : c.terms()) row_of.emplace(m, 0);
  WeylMonomial one{Monomial(n, 0), Monomial(n, 0)};
  row_of.emplace(one, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;
  FieldMatrix<Rational> mat(r, std::vector<Rational>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [m, v] : columns[j].terms()) mat[row_of[m]][j] = v.rational_part();
  std::vector<Rational> rhs(r);
  rhs[row_of[one]] = 1;
  return solve(mat, rhs).has_value();
}

}  // namespace tgkz::testing
